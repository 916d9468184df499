import { api, ApiError, submitAnswer } from './api.js';
import { findNextPending, store } from './state.js';
import { Answer } from './types.js';

const ANSWER_BUTTONS: { answer: Answer; label: string }[] = [
  { answer: 'yes', label: 'Yes' },
  { answer: 'no', label: 'No' },
  { answer: 'not_applicable', label: 'Not Applicable' },
  { answer: 'dont_know', label: "Don't know / Don't answer" },
];

export async function loadSession(sessionId: string): Promise<void> {
  store.set({ view: 'loading' });
  const session = await api.getSession(sessionId);
  const { questions } = await api.questions(sessionId);
  if (session.status === 'finalized') {
    const report = await api.report(sessionId, 'respondent');
    store.set({ view: 'results', session, questions, report });
    return;
  }
  const pending = findNextPending(questions, 0);
  store.set({
    view: 'wizard',
    session,
    questions,
    cursor: pending === -1 ? 0 : pending,
    report: null,
    analystReport: null,
    instructorView: false,
    unansweredIds: [],
  });
}

async function refresh(sessionId: string): Promise<void> {
  const session = await api.getSession(sessionId);
  const { questions } = await api.questions(sessionId);
  store.set({ session, questions });
}

async function answerCurrent(answer: Answer): Promise<void> {
  const { session, questions, cursor } = store.get();
  if (!session) return;
  const question = questions[cursor];
  const result = await submitAnswer(
    session.session_id,
    question.id,
    answer,
    session.revision,
  );
  if (result.conflict) {
    await refresh(session.session_id);
    store.set({
      toast:
        'This session changed in another tab; its state was refreshed. ' +
        'Please answer again to confirm.',
    });
    return;
  }
  const updated = questions.map((q) =>
    q.id === question.id ? { ...q, answer } : q,
  );
  const next = findNextPending(updated, cursor + 1);
  store.set({
    session: result.state,
    questions: updated,
    cursor: next === -1 ? cursor : next,
    toast: null,
  });
}

function skip(): void {
  const { questions, cursor } = store.get();
  const next = findNextPending(questions, cursor + 1);
  if (next !== -1 && next !== cursor) {
    store.set({ cursor: next, toast: null });
  } else {
    store.set({ toast: 'No other unanswered questions to skip to.' });
  }
}

async function finalize(): Promise<void> {
  const { session } = store.get();
  if (!session) return;
  try {
    const finalized = await api.finalize(session.session_id);
    const report = await api.report(session.session_id, 'respondent');
    store.set({ view: 'results', session: finalized, report, toast: null });
  } catch (err) {
    if (err instanceof ApiError && err.body.code === 'incomplete_session') {
      store.set({
        unansweredIds: err.body.unanswered ?? [],
        toast: 'Finalize is blocked while questions remain unanswered.',
      });
      return;
    }
    throw err;
  }
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderWizard(root: HTMLElement): void {
  const { session, questions, cursor, toast, unansweredIds } = store.get();
  if (!session) return;
  const panel = el('section', 'wizard');

  const answered = questions.filter((q) => q.answer !== null).length;
  const total = questions.length;
  const progress = el('div', 'progress');
  progress.setAttribute('role', 'progressbar');
  progress.setAttribute('aria-valuemin', '0');
  progress.setAttribute('aria-valuemax', String(total));
  progress.setAttribute('aria-valuenow', String(answered));
  const bar = el('div', 'progress-bar');
  bar.style.width = total ? `${(answered / total) * 100}%` : '0%';
  progress.appendChild(bar);
  panel.appendChild(progress);
  panel.appendChild(
    el('p', 'progress-text', `${answered} of ${total} questions answered`),
  );

  if (toast) {
    const note = el('div', 'toast', toast);
    note.setAttribute('role', 'status');
    panel.appendChild(note);
  }

  if (answered === total) {
    panel.appendChild(el('h2', undefined, 'All questions answered'));
    panel.appendChild(
      el('p', undefined, 'Finalize the session to see your results.'),
    );
    const done = el('button', 'primary', 'Finalize session');
    done.addEventListener('click', () => void finalize());
    panel.appendChild(done);
    root.replaceChildren(panel);
    return;
  }

  const question = questions[cursor];
  const card = el('article', 'question-card');
  card.appendChild(el('p', 'question-kicker', question.label));
  card.appendChild(el('h2', 'question-text', question.text));

  const reveal = el('div', 'reveal');
  const justificationBtn = el('button', 'link', 'Why this question?');
  const justification = el('p', 'reveal-body hidden', question.justification);
  justificationBtn.addEventListener('click', () =>
    justification.classList.toggle('hidden'),
  );
  const exampleBtn = el('button', 'link', 'Show an example');
  const example = el('p', 'reveal-body hidden', question.example);
  exampleBtn.addEventListener('click', () => example.classList.toggle('hidden'));
  reveal.append(justificationBtn, exampleBtn, justification, example);
  if (question.erratum_note) {
    reveal.appendChild(el('p', 'erratum', question.erratum_note));
  }
  card.appendChild(reveal);

  const buttons = el('div', 'answers');
  for (const { answer, label } of ANSWER_BUTTONS) {
    const button = el('button', 'answer', label);
    button.dataset.answer = answer;
    button.addEventListener('click', () => void answerCurrent(answer));
    buttons.appendChild(button);
  }
  const skipButton = el('button', 'skip', 'Skip');
  skipButton.addEventListener('click', skip);
  buttons.appendChild(skipButton);
  card.appendChild(buttons);
  panel.appendChild(card);

  if (unansweredIds.length > 0) {
    const warning = el('div', 'unanswered');
    warning.appendChild(
      el('p', undefined, `Unanswered questions: ${unansweredIds.join(', ')}`),
    );
    panel.appendChild(warning);
  }

  root.replaceChildren(panel);
}
