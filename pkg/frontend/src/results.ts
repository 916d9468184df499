import { api } from './api.js';
import { store } from './state.js';
import { Answer, ReportPayload, ReportTypeEntry } from './types.js';

const ANSWER_LABELS: Record<Answer, string> = {
  yes: 'YES',
  no: 'NO',
  not_applicable: 'Not Applicable',
  dont_know: "I Don't Know/I Don't Answer",
};

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

function verdictBanner(report: ReportPayload): HTMLElement {
  if (report.verdict === 'zero_debt') {
    return el(
      'div',
      'banner zero-debt',
      `Zero technical debt: total ${report.grand_total} ≤ 0. ` +
        'The platform adheres to the measured best practices.',
    );
  }
  if (report.verdict === 'debt_present') {
    return el(
      'div',
      'banner debt-present',
      `Technical debt present: total ${report.grand_total} > 0.`,
    );
  }
  return el('div', 'banner pending', 'Verdict pending: session not finalized.');
}

/** Diverging bar chart of per-type signed totals (negative = good). */
function typeBars(perType: ReportTypeEntry[]): HTMLElement {
  const chart = el('div', 'type-bars');
  const maxAbs = Math.max(1, ...perType.map((t) => Math.abs(t.total)));
  for (const entry of perType) {
    const row = el('div', 'bar-row');
    row.appendChild(el('span', 'bar-label', entry.label));
    const track = el('div', 'bar-track');
    const half = el('div', 'bar-half negative');
    const positive = el('div', 'bar-half positive');
    const magnitude = `${(Math.abs(entry.total) / maxAbs) * 100}%`;
    if (entry.total < 0) {
      const fill = el('div', 'bar-fill good');
      fill.style.width = magnitude;
      half.appendChild(fill);
    } else if (entry.total > 0) {
      const fill = el('div', 'bar-fill bad');
      fill.style.width = magnitude;
      positive.appendChild(fill);
    }
    track.append(half, positive);
    row.appendChild(track);
    const value = el('span', 'bar-value', String(entry.total));
    value.dataset.type = entry.type;
    row.appendChild(value);
    chart.appendChild(row);
  }
  return chart;
}

function analystTables(report: ReportPayload): HTMLElement {
  const wrap = el('section', 'analyst');
  wrap.appendChild(el('h3', undefined, 'Instructor view: full arithmetic'));
  for (const entry of report.per_type) {
    if (entry.questions.length === 0) continue;
    wrap.appendChild(el('h4', undefined, entry.label));
    const table = el('table', 'analyst-table');
    const head = el('tr');
    for (const column of ['Question', 'Score', 'Answer', 'Calculated Score']) {
      head.appendChild(el('th', undefined, column));
    }
    table.appendChild(head);
    for (const q of entry.questions) {
      const row = el('tr');
      row.appendChild(el('td', undefined, q.text));
      row.appendChild(el('td', 'num', String(q.weight ?? '')));
      row.appendChild(
        el('td', undefined, q.answer ? ANSWER_LABELS[q.answer] : 'Unanswered'),
      );
      row.appendChild(
        el('td', 'num', q.score === null || q.score === undefined ? '' : String(q.score)),
      );
      table.appendChild(row);
    }
    const totalRow = el('tr', 'overall');
    totalRow.appendChild(el('td', undefined, 'Overall Rating'));
    totalRow.appendChild(el('td'));
    totalRow.appendChild(el('td'));
    totalRow.appendChild(el('td', 'num', String(entry.total)));
    table.appendChild(totalRow);
    wrap.appendChild(table);
  }
  return wrap;
}

async function toggleInstructorView(): Promise<void> {
  const { session, instructorView, analystReport } = store.get();
  if (!session) return;
  if (instructorView) {
    store.set({ instructorView: false });
    return;
  }
  const report =
    analystReport ?? (await api.report(session.session_id, 'analyst'));
  store.set({ instructorView: true, analystReport: report });
}

export function renderResults(root: HTMLElement): void {
  const { report, instructorView, analystReport } = store.get();
  if (!report) return;
  const panel = el('section', 'results');
  panel.appendChild(el('h2', undefined, `Results for ${report.platform_label}`));
  panel.appendChild(verdictBanner(report));

  const stats = el('div', 'stats');
  const grand = el('p', 'grand-total', `Grand total: ${report.grand_total}`);
  grand.dataset.total = String(report.grand_total);
  stats.appendChild(grand);
  stats.appendChild(
    el(
      'p',
      'debt-index',
      report.debt_index === null
        ? 'Debt index: N/A (nothing scoreable was answered)'
        : `Debt index: ${(report.debt_index * 100).toFixed(1)}%`,
    ),
  );
  stats.appendChild(
    el(
      'p',
      'completion',
      `Completed ${report.completion.answered} of ` +
        `${report.completion.applicable} applicable questions as ` +
        `${report.role}.`,
    ),
  );
  panel.appendChild(stats);

  panel.appendChild(el('h3', undefined, 'Per-type totals (negative is good)'));
  panel.appendChild(typeBars(report.per_type));

  const toggle = el(
    'button',
    'instructor-toggle',
    instructorView ? 'Hide instructor view' : 'Instructor view',
  );
  toggle.addEventListener('click', () => void toggleInstructorView());
  panel.appendChild(toggle);

  if (instructorView && analystReport) {
    panel.appendChild(analystTables(analystReport));
  }

  root.replaceChildren(panel);
}
