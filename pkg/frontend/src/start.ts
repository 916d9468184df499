import { api, ApiError } from './api.js';
import { store } from './state.js';
import { Role } from './types.js';

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

async function begin(role: Role, label: string): Promise<void> {
  try {
    const session = await api.createSession(role, label);
    window.location.hash = `#/session/${session.session_id}`;
  } catch (err) {
    if (err instanceof ApiError) {
      store.set({ toast: err.body.message });
      return;
    }
    throw err;
  }
}

export function renderStart(root: HTMLElement): void {
  const { toast } = store.get();
  const panel = el('section', 'start');
  panel.appendChild(el('h2', undefined, 'Assess your platform'));
  panel.appendChild(
    el(
      'p',
      undefined,
      'Answer a guided questionnaire about engineering practices; ' +
        'the running total stays hidden until you finish.',
    ),
  );

  const form = el('form', 'start-form');
  const roleSet = el('fieldset');
  roleSet.appendChild(el('legend', undefined, 'I am responding as'));
  for (const role of ['organizer', 'participant'] as Role[]) {
    const wrapper = el('label', 'radio');
    const input = el('input');
    input.type = 'radio';
    input.name = 'role';
    input.value = role;
    if (role === 'organizer') input.checked = true;
    wrapper.appendChild(input);
    wrapper.appendChild(document.createTextNode(` ${role}`));
    roleSet.appendChild(wrapper);
  }
  form.appendChild(roleSet);

  const labelInput = el('input', 'label-input');
  labelInput.name = 'label';
  labelInput.placeholder = 'Platform label, e.g. RLGame-2024';
  labelInput.required = true;
  form.appendChild(labelInput);

  const submit = el('button', 'primary', 'Start assessment');
  submit.type = 'submit';
  form.appendChild(submit);

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const data = new FormData(form);
    const role = (data.get('role') as Role) ?? 'organizer';
    const label = String(data.get('label') ?? '').trim();
    if (!label) {
      store.set({ toast: 'Please give the platform a label.' });
      return;
    }
    void begin(role, label);
  });
  panel.appendChild(form);

  if (toast) {
    const note = el('div', 'toast', toast);
    note.setAttribute('role', 'status');
    panel.appendChild(note);
  }
  root.replaceChildren(panel);
}
