/**
 * Application controller: one session per page, no client-side
 * semantics.  Every view update comes from a server response; firing
 * and undo wait for confirmation before re-rendering (no optimistic
 * updates), and a stale fire (409) refreshes the enabled list from the
 * error body without touching the rest of the view.
 */

import { ApiError, SessionApi } from './api.js';
import type { FetchLike } from './api.js';
import { buildGraph } from './graph.js';
import {
  renderBanner,
  renderEnabledPanel,
  renderGammaPanel,
  renderHistoryPanel,
  renderMarkingPanel,
} from './panels.js';
import { GraphView } from './render.js';
import type { ConfigJson, NetJson, StepJson } from './types.js';
import { stepLabel } from './types.js';

export const EXAMPLE_SOURCE = `net Ne2
const St1, St2, In, De, I_AB, f1, f2
var I, D
place St1, St2, In, De, I_AB
trans t1
trans t2 link true => +I
trans t3
trans t4 link true => -I
arc St1 -> t1 : D        arc t1 -> I_AB : D
arc In  -> t2 : I        arc t2 -> I : empty     arc t2 -> De : I
arc I   -> t3 : D        arc t3 -> St2 : D
arc De  -> t4 : I        arc t4 -> I : empty
marking St1 { f1, f2 }   marking In { I_AB }
`;

/** View model, derived purely from session-service responses. */
interface ViewState {
  net: NetJson;
  config: ConfigJson;
  enabled: StepJson[];
  history: StepJson[];
}

export class App {
  readonly root: HTMLElement;
  private readonly api: SessionApi;
  private sessionId = '';
  private view: ViewState | null = null;
  private busy = false;
  private bannerText = '';

  // DOM regions
  private readonly banner: HTMLElement;
  private readonly setup: HTMLElement;
  private readonly sourceInput: HTMLTextAreaElement;
  private readonly diagnosticsList: HTMLElement;
  private readonly session: HTMLElement;
  private readonly sessionLabel: HTMLElement;
  private readonly graphHost: HTMLElement;
  private readonly enabledHost: HTMLElement;
  private readonly gammaHost: HTMLElement;
  private readonly markingHost: HTMLElement;
  private readonly historyHost: HTMLElement;
  private graphView: GraphView | null = null;

  constructor(root: HTMLElement, api: SessionApi) {
    this.root = root;
    this.api = api;

    root.classList.add('vpn-app');

    const header = document.createElement('header');
    const title = document.createElement('h1');
    title.textContent = 'Variable Petri net token game';
    this.sessionLabel = document.createElement('span');
    this.sessionLabel.className = 'session-label';
    this.banner = document.createElement('div');
    this.banner.className = 'banner';
    header.append(title, this.sessionLabel);
    root.append(header, this.banner);

    this.setup = document.createElement('section');
    this.setup.className = 'setup';
    const prompt = document.createElement('p');
    prompt.textContent = 'Describe a net, then start a session:';
    this.sourceInput = document.createElement('textarea');
    this.sourceInput.value = EXAMPLE_SOURCE;
    this.sourceInput.rows = 14;
    this.sourceInput.spellcheck = false;
    const startButton = document.createElement('button');
    startButton.type = 'button';
    startButton.className = 'start-button';
    startButton.textContent = 'Start session';
    startButton.addEventListener('click', () => {
      void this.start(this.sourceInput.value);
    });
    this.diagnosticsList = document.createElement('ul');
    this.diagnosticsList.className = 'diagnostics';
    this.setup.append(prompt, this.sourceInput, startButton, this.diagnosticsList);
    root.appendChild(this.setup);

    this.session = document.createElement('main');
    this.session.className = 'session';
    this.session.hidden = true;
    this.graphHost = document.createElement('section');
    this.graphHost.className = 'graph-host';
    const aside = document.createElement('aside');
    aside.className = 'panels';
    this.enabledHost = document.createElement('section');
    this.enabledHost.className = 'panel enabled-panel';
    this.gammaHost = document.createElement('section');
    this.gammaHost.className = 'panel gamma-panel';
    this.markingHost = document.createElement('section');
    this.markingHost.className = 'panel marking-panel';
    this.historyHost = document.createElement('section');
    this.historyHost.className = 'panel history-panel';
    aside.append(
      this.enabledHost,
      this.gammaHost,
      this.markingHost,
      this.historyHost,
    );
    this.session.append(this.graphHost, aside);
    root.appendChild(this.session);
  }

  get currentSessionId(): string {
    return this.sessionId;
  }

  /** Create a session from source text and show the token game. */
  async start(source: string): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    try {
      const created = await this.api.createSession(source);
      const net = await this.api.getNet(created.id);
      this.sessionId = created.id;
      this.view = {
        net,
        config: created.config,
        enabled: created.enabled,
        history: [],
      };
      this.bannerText = '';
      this.showDiagnostics([]);
    } catch (err) {
      if (err instanceof ApiError && err.status === 400) {
        this.showDiagnostics(
          err.diagnostics.map(
            (d) => `${d.line}:${d.column}: ${d.message}`,
          ),
        );
      } else {
        this.bannerText = describeError(err);
      }
    } finally {
      this.busy = false;
      this.render();
    }
  }

  /** Attach to an existing session (e.g. from a #sessionId URL). */
  async attach(id: string): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    try {
      const [state, net] = await Promise.all([
        this.api.getSession(id),
        this.api.getNet(id),
      ]);
      this.sessionId = id;
      this.view = {
        net,
        config: state.config,
        enabled: state.enabled,
        history: [],
      };
      this.bannerText = '';
    } catch (err) {
      this.bannerText = describeError(err);
    } finally {
      this.busy = false;
      this.render();
    }
  }

  /** Fire one enabled step; on 409 refresh the enabled list only. */
  async fire(step: StepJson): Promise<void> {
    if (this.busy || !this.view) return;
    this.busy = true;
    this.render();
    try {
      const result = await this.api.fire(this.sessionId, step);
      this.view = {
        ...this.view,
        config: result.config,
        enabled: result.enabled,
        history: [...this.view.history, step],
      };
      this.bannerText = '';
      this.busy = false;
      this.render();
      this.graphView?.animateFiring(result.event);
    } catch (err) {
      if (err instanceof ApiError && err.status === 409 && err.enabled) {
        this.view = { ...this.view, enabled: err.enabled };
        this.bannerText = `step ${stepLabel(step)} is no longer enabled — list refreshed`;
      } else {
        this.bannerText = describeError(err);
      }
      this.busy = false;
      this.render();
    }
  }

  /** Undo the latest fired step. */
  async undo(): Promise<void> {
    if (this.busy || !this.view) return;
    this.busy = true;
    this.render();
    try {
      const result = await this.api.undo(this.sessionId);
      this.view = {
        ...this.view,
        config: result.config,
        enabled: result.enabled,
        history: result.atRoot ? [] : this.view.history.slice(0, -1),
      };
      this.bannerText = '';
    } catch (err) {
      this.bannerText = describeError(err);
    } finally {
      this.busy = false;
      this.render();
    }
  }

  private showDiagnostics(rows: string[]): void {
    this.diagnosticsList.replaceChildren(
      ...rows.map((row) => {
        const item = document.createElement('li');
        item.textContent = row;
        return item;
      }),
    );
  }

  /** Redraw everything from the current view state. */
  render(): void {
    renderBanner(this.banner, this.bannerText);
    if (!this.view) {
      this.setup.hidden = false;
      this.session.hidden = true;
      this.sessionLabel.textContent = '';
      return;
    }
    this.setup.hidden = true;
    this.session.hidden = false;
    this.sessionLabel.textContent = `${this.view.net.name} — session ${this.sessionId}`;

    if (!this.graphView) this.graphView = new GraphView(this.graphHost);
    this.graphView.update(buildGraph(this.view.net, this.view.config));

    renderEnabledPanel(this.enabledHost, this.view.enabled, this.busy, (step) => {
      void this.fire(step);
    });
    renderGammaPanel(this.gammaHost, this.view.config.gamma);
    renderMarkingPanel(this.markingHost, this.view.config);
    renderHistoryPanel(this.historyHost, this.view.history, this.busy, () => {
      void this.undo();
    });
  }
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    if (err.status === 404) return 'unknown session — it may have expired';
    return err.detail;
  }
  return err instanceof Error ? err.message : String(err);
}

/** Mount the application under `root`, talking to `apiBase`. */
export function createApp(
  root: HTMLElement,
  apiBase = '',
  fetchImpl?: FetchLike,
): App {
  const api = new SessionApi(apiBase, fetchImpl);
  const app = new App(root, api);
  app.render();
  return app;
}
