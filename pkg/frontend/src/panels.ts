/**
 * Side panels: enabled steps, connectivity (gamma), marking summary,
 * and fired-step history with undo.  Pure DOM builders — each render
 * replaces the panel's children from the latest server state.
 */

import type { ConfigJson, GammaJson, StepJson } from './types.js';
import { gammaRow, renderMsetEntry, stepLabel } from './types.js';

function heading(title: string): HTMLElement {
  const h = document.createElement('h2');
  h.textContent = title;
  return h;
}

function emptyNote(text: string): HTMLElement {
  const p = document.createElement('p');
  p.className = 'empty-note';
  p.textContent = text;
  return p;
}

/** Buttons for every currently enabled step, labeled like the CLI. */
export function renderEnabledPanel(
  host: HTMLElement,
  enabled: StepJson[],
  busy: boolean,
  onFire: (step: StepJson) => void,
): void {
  host.replaceChildren(heading('Enabled steps'));
  if (enabled.length === 0) {
    host.appendChild(emptyNote('no enabled steps — terminal'));
    return;
  }
  const list = document.createElement('ul');
  list.className = 'enabled-list';
  for (const step of enabled) {
    const item = document.createElement('li');
    const button = document.createElement('button');
    button.type = 'button';
    button.className = 'fire-button';
    button.textContent = stepLabel(step);
    button.disabled = busy;
    button.addEventListener('click', () => onFire(step));
    item.appendChild(button);
    list.appendChild(item);
  }
  host.appendChild(list);
}

/** Connectivity rows, `I -> {I_AB}` per linked variable. */
export function renderGammaPanel(host: HTMLElement, gamma: GammaJson): void {
  host.replaceChildren(heading('Connectivity γ'));
  const variables = Object.keys(gamma).sort();
  if (variables.length === 0) {
    host.appendChild(emptyNote('NULL'));
    return;
  }
  const list = document.createElement('ul');
  list.className = 'gamma-list';
  for (const variable of variables) {
    const item = document.createElement('li');
    item.textContent = gammaRow(variable, gamma[variable]);
    list.appendChild(item);
  }
  host.appendChild(list);
}

/** Non-empty places and their tokens, as text rows. */
export function renderMarkingPanel(
  host: HTMLElement,
  config: ConfigJson,
): void {
  host.replaceChildren(heading('Marking'));
  const rows = Object.entries(config.marking)
    .filter(([, entries]) => entries.length > 0)
    .map(
      ([place, entries]) =>
        `${place} { ${entries.map(renderMsetEntry).join(', ')} }`,
    );
  if (rows.length === 0) {
    host.appendChild(emptyNote('empty'));
    return;
  }
  const list = document.createElement('ul');
  list.className = 'marking-list';
  for (const row of rows) {
    const item = document.createElement('li');
    item.textContent = row;
    list.appendChild(item);
  }
  host.appendChild(list);
}

/** Fired steps in order, plus an undo button for the latest one. */
export function renderHistoryPanel(
  host: HTMLElement,
  history: StepJson[],
  busy: boolean,
  onUndo: () => void,
): void {
  host.replaceChildren(heading('History'));
  const list = document.createElement('ol');
  list.className = 'history-list';
  for (const step of history) {
    const item = document.createElement('li');
    item.textContent = stepLabel(step);
    list.appendChild(item);
  }
  if (history.length === 0) {
    host.appendChild(emptyNote('at the initial configuration'));
  } else {
    host.appendChild(list);
  }
  const undo = document.createElement('button');
  undo.type = 'button';
  undo.className = 'undo-button';
  undo.textContent = 'Undo';
  undo.disabled = busy || history.length === 0;
  undo.addEventListener('click', onUndo);
  host.appendChild(undo);
}

/** Transient banner for errors and stale-step notices. */
export function renderBanner(host: HTMLElement, message: string): void {
  host.replaceChildren();
  if (!message) {
    host.classList.remove('visible');
    return;
  }
  host.classList.add('visible');
  const p = document.createElement('p');
  p.textContent = message;
  host.appendChild(p);
}
