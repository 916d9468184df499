export type Role = 'organizer' | 'participant';
export type Answer = 'yes' | 'no' | 'not_applicable' | 'dont_know';

export interface SessionSummary {
  session_id: string;
  role: Role;
  platform_label: string;
  bank_hash: string;
  status: 'in_progress' | 'finalized';
  revision: number;
  created_at: string;
  updated_at: string;
  answered: number;
  applicable: number;
}

export interface QuestionPayload {
  id: number;
  type: string;
  label: string;
  text: string;
  justification: string;
  example: string;
  answer: Answer | null;
  erratum_note?: string;
}

export interface ReportQuestion {
  id: number;
  text: string;
  answer: Answer | null;
  // analyst-only fields
  weight?: number;
  score?: number | null;
}

export interface ReportTypeEntry {
  type: string;
  label: string;
  total: number;
  answered: number;
  questions: ReportQuestion[];
  scoreable_weight?: number;
  max_weight?: number;
}

export interface ReportPayload {
  session_id: string;
  role: Role;
  platform_label: string;
  generated_at: string;
  audience: 'respondent' | 'analyst';
  status: string;
  partial: boolean;
  completion: { answered: number; applicable: number };
  per_type: ReportTypeEntry[];
  grand_total: number;
  debt_index: number | null;
  debt_index_note: string;
  verdict: 'zero_debt' | 'debt_present' | null;
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
  unanswered?: number[];
}
