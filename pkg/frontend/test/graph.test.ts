/** Render-model derivation from the structural view plus a configuration. */

import { describe, expect, it } from 'vitest';

import { buildGraph } from '../src/graph.js';
import {
  dispatchConfig0,
  dispatchConfig1,
  dispatchNet,
  ne2Config0,
  ne2Config1,
  ne2Net,
} from './fixtures.js';

describe('buildGraph on the two-slot transfer net', () => {
  const graph = buildGraph(ne2Net, ne2Config0);

  it('has 5 solid places, 2 virtual places, and 4 transitions', () => {
    const byKind = (kind: string) =>
      graph.nodes.filter((n) => n.kind === kind);
    expect(byKind('place').map((n) => n.id)).toEqual([
      'De',
      'I_AB',
      'In',
      'St1',
      'St2',
    ]);
    expect(byKind('virtual').map((n) => n.id)).toEqual(['D', 'I']);
    expect(byKind('transition').map((n) => n.id)).toEqual([
      't1',
      't2',
      't3',
      't4',
    ]);
  });

  it('lists the tokens of marked places', () => {
    const tokens = new Map(graph.nodes.map((n) => [n.id, n.tokens]));
    expect(tokens.get('St1')).toEqual(['f1', 'f2']);
    expect(tokens.get('In')).toEqual(['I_AB']);
    expect(tokens.get('De')).toEqual([]);
  });

  it('keeps all 9 arcs and flags the virtual ones', () => {
    expect(graph.edges).toHaveLength(9);
    const virtual = graph.edges.filter((e) => e.virtual);
    expect(virtual.map((e) => `${e.from}->${e.to}`).sort()).toEqual([
      'I->t3',
      't2->I',
      't4->I',
    ]);
  });

  it('drops the empty-inscription label', () => {
    const toVirtual = graph.edges.find((e) => e.from === 't2' && e.to === 'I');
    expect(toVirtual?.label).toBe('');
  });

  it('summarizes link clauses on transitions', () => {
    const ops = new Map(graph.nodes.map((n) => [n.id, n.linkOps]));
    expect(ops.get('t2')).toEqual(['+I']);
    expect(ops.get('t4')).toEqual(['-I']);
    expect(ops.get('t1')).toEqual([]);
  });

  it('updates tokens from a later configuration', () => {
    const after = buildGraph(ne2Net, ne2Config1);
    const tokens = new Map(after.nodes.map((n) => [n.id, n.tokens]));
    expect(tokens.get('De')).toEqual(['I_AB']);
    expect(tokens.get('In')).toEqual([]);
  });
});

describe('buildGraph with created places', () => {
  it('ignores created places before they exist', () => {
    const graph = buildGraph(dispatchNet, dispatchConfig0);
    expect(graph.nodes.filter((n) => n.created)).toEqual([]);
    const tokens = new Map(graph.nodes.map((n) => [n.id, n.tokens]));
    expect(tokens.get('S1')).toEqual(['(R1,D1)', '(R2,D2)']);
  });

  it('adds runtime places flagged as created', () => {
    const graph = buildGraph(dispatchNet, dispatchConfig1);
    const created = graph.nodes.filter((n) => n.created);
    expect(created.map((n) => n.id)).toEqual(['R1']);
    expect(created[0].kind).toBe('place');
    expect(created[0].tokens).toEqual(['D1']);
  });

  it('shows a non-trivial guard on the transition', () => {
    const graph = buildGraph(dispatchNet, dispatchConfig0);
    const t1 = graph.nodes.find((n) => n.id === 't1');
    expect(t1?.guard).toBe('R == R1 || R == R2');
  });
});
