import { store } from './state.js';
import { renderStart } from './start.js';
import { loadSession, renderWizard } from './wizard.js';
import { renderResults } from './results.js';

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function sessionIdFromHash(hash: string): string | null {
  const match = /^#\/session\/([0-9a-f]{32})$/.exec(hash);
  return match ? match[1] : null;
}

function render(root: HTMLElement): void {
  const { view } = store.get();
  if (view === 'loading') {
    root.replaceChildren(el('p', 'loading', 'Loading…'));
  } else if (view === 'wizard') {
    renderWizard(root);
  } else if (view === 'results') {
    renderResults(root);
  } else {
    renderStart(root);
  }
}

async function route(): Promise<void> {
  const sessionId = sessionIdFromHash(window.location.hash);
  if (sessionId === null) {
    store.reset();
    return;
  }
  const current = store.get().session;
  if (current && current.session_id === sessionId && store.get().view !== 'start') {
    return; // already showing this session
  }
  try {
    await loadSession(sessionId);
  } catch {
    store.reset();
    store.set({ toast: 'That session could not be loaded.' });
    window.location.hash = '';
  }
}

/** Mount the app; state always derives from the API, so reloading or
 * re-entering a session URL resumes where the respondent left off. */
export function bootApp(root: HTMLElement): void {
  store.subscribe(() => render(root));
  window.addEventListener('hashchange', () => void route());
  render(root);
  void route();
}

const mount = document.getElementById('app');
if (mount) {
  bootApp(mount);
}
