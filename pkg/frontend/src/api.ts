/**
 * Typed client for the session-service REST API.
 *
 * Every method resolves to the parsed JSON body or rejects with an
 * ApiError carrying the HTTP status and decoded body, so callers can
 * branch on 404/409/400 without touching fetch internals.
 */

import type {
  Diagnostic,
  FireResult,
  NetJson,
  SessionCreated,
  SessionView,
  StepJson,
  UndoResult,
} from './types.js';

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly body: unknown,
  ) {
    super(`request failed with status ${status}`);
    this.name = 'ApiError';
  }

  /** Server-provided error text, when the body carries one. */
  get detail(): string {
    const body = this.body as { error?: string } | null;
    return body && typeof body.error === 'string'
      ? body.error
      : this.message;
  }

  /** Parse/validation diagnostics from a 400 response, if any. */
  get diagnostics(): Diagnostic[] {
    const body = this.body as { diagnostics?: Diagnostic[] } | null;
    return body && Array.isArray(body.diagnostics) ? body.diagnostics : [];
  }

  /** Refreshed enabled list from a 409 response, if any. */
  get enabled(): StepJson[] | null {
    const body = this.body as { enabled?: StepJson[] } | null;
    return body && Array.isArray(body.enabled) ? body.enabled : null;
  }
}

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export class SessionApi {
  constructor(
    private readonly base: string = '',
    private readonly fetchImpl: FetchLike = (input, init) =>
      fetch(input, init),
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { 'content-type': 'application/json' };
      init.body = JSON.stringify(body);
    }
    const resp = await this.fetchImpl(`${this.base}${path}`, init);
    const text = await resp.text();
    const decoded = text ? JSON.parse(text) : null;
    if (!resp.ok) throw new ApiError(resp.status, decoded);
    return decoded as T;
  }

  createSession(source: string): Promise<SessionCreated> {
    return this.request('POST', '/api/sessions', { source });
  }

  getSession(id: string): Promise<SessionView> {
    return this.request('GET', `/api/sessions/${id}`);
  }

  getNet(id: string): Promise<NetJson> {
    return this.request('GET', `/api/sessions/${id}/net`);
  }

  fire(id: string, step: StepJson): Promise<FireResult> {
    return this.request('POST', `/api/sessions/${id}/fire`, step);
  }

  undo(id: string): Promise<UndoResult> {
    return this.request('POST', `/api/sessions/${id}/undo`);
  }

  deleteSession(id: string): Promise<null> {
    return this.request('DELETE', `/api/sessions/${id}`);
  }
}
