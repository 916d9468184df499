import { QuestionPayload, ReportPayload, SessionSummary } from './types.js';

export type View = 'start' | 'wizard' | 'results' | 'loading';

export interface AppState {
  view: View;
  session: SessionSummary | null;
  questions: QuestionPayload[];
  cursor: number; // index of the question currently shown
  report: ReportPayload | null;
  analystReport: ReportPayload | null;
  instructorView: boolean;
  toast: string | null;
  unansweredIds: number[]; // from a refused finalize
}

const initial: AppState = {
  view: 'start',
  session: null,
  questions: [],
  cursor: 0,
  report: null,
  analystReport: null,
  instructorView: false,
  toast: null,
  unansweredIds: [],
};

type Listener = () => void;

function createStore(state: AppState) {
  const listeners = new Set<Listener>();
  return {
    get: () => state,
    set(patch: Partial<AppState>) {
      state = { ...state, ...patch };
      listeners.forEach((fn) => fn());
    },
    reset() {
      state = { ...initial };
      listeners.forEach((fn) => fn());
    },
    subscribe(fn: Listener) {
      listeners.add(fn);
      return () => listeners.delete(fn);
    },
  };
}

export const store = createStore({ ...initial });

/** Index of the next question without an answer, searching forward from
 * `from` and wrapping around; -1 when everything is answered. */
export function findNextPending(questions: QuestionPayload[], from: number): number {
  const n = questions.length;
  for (let step = 0; step < n; step++) {
    const i = (from + step) % n;
    if (questions[i].answer === null) return i;
  }
  return -1;
}
