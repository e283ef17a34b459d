/**
 * Wire types for the session-service REST API.
 *
 * These mirror the JSON the server emits; the UI derives everything it
 * shows from them and holds no net semantics of its own.
 */

/** A token is a tuple of constant names; width-1 tokens are the common case. */
export type Token = string[];

/**
 * One multiset entry: a token occurrence (repeated entries encode
 * multiplicity) or an unbounded count marked omega.
 */
export type MsetEntry = Token | { token: Token; count: 'omega' };

/** Connectivity: variable name to the sorted constants it stands for. */
export type GammaJson = Record<string, string[]>;

/** A configuration: marking, current solid places, and connectivity. */
export interface ConfigJson {
  marking: Record<string, MsetEntry[]>;
  places: string[];
  gamma: GammaJson;
}

/** An enabled (or fired) step: transition plus variable binding. */
export interface StepJson {
  transition: string;
  binding: Record<string, string>;
}

export interface GammaOpJson {
  variable: string;
  constant: string;
  direction: '+' | '-';
}

/** Everything one firing did, for display and animation. */
export interface EventJson {
  transition: string;
  binding: Record<string, string>;
  consumed: Record<string, MsetEntry[]>;
  produced: Record<string, MsetEntry[]>;
  newPlaces: string[];
  gammaOps: GammaOpJson[];
  solidArcs: { from: string; to: string }[];
}

export interface NetArcJson {
  from: string;
  to: string;
  weight: string;
  virtual: boolean;
}

export interface LinkClauseJson {
  condition: string;
  variable: string;
  direction: '+' | '-';
}

export interface NetTransitionJson {
  name: string;
  guard: string;
  link: LinkClauseJson[];
}

/** Structural net view served by GET /api/sessions/{id}/net. */
export interface NetJson {
  name: string;
  constants: Record<string, number>;
  variables: string[];
  places: string[];
  transitions: NetTransitionJson[];
  arcs: NetArcJson[];
  gamma: GammaJson;
  marking: Record<string, MsetEntry[]>;
}

export interface Diagnostic {
  line: number;
  column: number;
  length: number;
  message: string;
}

export interface SessionCreated {
  id: string;
  config: ConfigJson;
  enabled: StepJson[];
}

export interface SessionView {
  config: ConfigJson;
  enabled: StepJson[];
  historyLength: number;
}

export interface FireResult {
  config: ConfigJson;
  enabled: StepJson[];
  event: EventJson;
}

export interface UndoResult {
  config: ConfigJson;
  enabled: StepJson[];
  atRoot: boolean;
}

/** Render a token the way the CLI does: `f1` or `(a,b)`. */
export function renderToken(token: Token): string {
  return token.length === 1 ? token[0] : `(${token.join(',')})`;
}

/** Render one multiset entry, e.g. `f1` or `ω*eps`. */
export function renderMsetEntry(entry: MsetEntry): string {
  if (Array.isArray(entry)) return renderToken(entry);
  return `ω*${renderToken(entry.token)}`;
}

/**
 * Human text of a step, matching the CLI stepper: `t2 [I=I_AB]`, bare
 * `t5` when the binding is empty, keys sorted.
 */
export function stepLabel(step: StepJson): string {
  const entries = Object.entries(step.binding).sort(([a], [b]) =>
    a < b ? -1 : a > b ? 1 : 0,
  );
  if (entries.length === 0) return step.transition;
  const inner = entries.map(([v, c]) => `${v}=${c}`).join('; ');
  return `${step.transition} [${inner}]`;
}

/** Render one connectivity row the way the CLI does: `I -> {I_AB}`. */
export function gammaRow(variable: string, constants: string[]): string {
  return `${variable} -> {${constants.join(', ')}}`;
}

/** Two steps are the same choice if transition and binding agree. */
export function sameStep(a: StepJson, b: StepJson): boolean {
  return stepLabel(a) === stepLabel(b);
}
