import {
  Answer,
  ApiErrorBody,
  QuestionPayload,
  ReportPayload,
  Role,
  SessionSummary,
} from './types.js';

let baseUrl = '';

/** Point the client at another origin (tests target a spawned server). */
export function configureApi(url: string): void {
  baseUrl = url.replace(/\/+$/, '');
}

export class ApiError extends Error {
  constructor(readonly body: ApiErrorBody) {
    super(body.message);
    this.name = 'ApiError';
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(baseUrl + path, {
    headers: { 'content-type': 'application/json' },
    ...init,
  });
  if (!response.ok) {
    let body: ApiErrorBody;
    try {
      body = (await response.json()) as ApiErrorBody;
    } catch {
      body = { status: response.status, code: 'http_error', message: response.statusText };
    }
    throw new ApiError(body);
  }
  return (await response.json()) as T;
}

export const api = {
  bankMeta: () => request<Record<string, unknown>>('/api/bank/meta'),

  createSession: (role: Role, label: string) =>
    request<SessionSummary>('/api/sessions', {
      method: 'POST',
      body: JSON.stringify({ role, label }),
    }),

  getSession: (sessionId: string) =>
    request<SessionSummary>(`/api/sessions/${sessionId}`),

  questions: (sessionId: string) =>
    request<{ questions: QuestionPayload[] }>(
      `/api/sessions/${sessionId}/questions`,
    ),

  putAnswer: (sessionId: string, questionId: number, answer: Answer, revision: number) =>
    request<SessionSummary>(`/api/sessions/${sessionId}/answers/${questionId}`, {
      method: 'PUT',
      body: JSON.stringify({ answer, revision }),
    }),

  finalize: (sessionId: string) =>
    request<SessionSummary>(`/api/sessions/${sessionId}/finalize`, {
      method: 'POST',
    }),

  report: (sessionId: string, audience: 'respondent' | 'analyst') =>
    request<ReportPayload>(
      `/api/sessions/${sessionId}/report?audience=${audience}&format=json`,
    ),
};

export interface SubmitResult {
  state: SessionSummary;
  conflict: boolean;
}

/**
 * PUT one answer with optimistic concurrency. On a revision conflict the
 * session state is refreshed automatically and `conflict` is set so the UI
 * can ask the respondent to confirm against the fresh state.
 */
export async function submitAnswer(
  sessionId: string,
  questionId: number,
  answer: Answer,
  revision: number,
): Promise<SubmitResult> {
  try {
    const state = await api.putAnswer(sessionId, questionId, answer, revision);
    return { state, conflict: false };
  } catch (err) {
    if (err instanceof ApiError && err.body.code === 'revision_conflict') {
      const state = await api.getSession(sessionId);
      return { state, conflict: true };
    }
    throw err;
  }
}
