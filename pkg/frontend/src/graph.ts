/**
 * Render model for the net graph.
 *
 * Derived purely from the structural net view plus the current
 * configuration: declared places, variables (drawn as dashed virtual
 * places), transitions, and any places created at runtime (present in
 * the configuration but not declared).  No semantics live here.
 */

import type { ConfigJson, NetJson } from './types.js';
import { renderMsetEntry } from './types.js';

export type NodeKind = 'place' | 'virtual' | 'transition';

export interface GraphNode {
  id: string;
  kind: NodeKind;
  /** Rendered tokens currently in the place (empty for transitions/virtuals). */
  tokens: string[];
  /** True for places that were created by firing, not declared. */
  created: boolean;
  /** Guard text for transitions (empty when trivially true). */
  guard: string;
  /** Link-clause summary for transitions, e.g. ["+I", "-J"]. */
  linkOps: string[];
}

export interface GraphEdge {
  from: string;
  to: string;
  label: string;
  /** True when the arc touches a virtual place (drawn dashed). */
  virtual: boolean;
}

export interface NetGraph {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

function tokensOf(config: ConfigJson, place: string): string[] {
  const entries = config.marking[place] ?? [];
  return entries.map(renderMsetEntry);
}

/** Build the drawable graph for a net in a given configuration. */
export function buildGraph(net: NetJson, config: ConfigJson): NetGraph {
  const declared = new Set(net.places);
  const nodes: GraphNode[] = [];

  for (const place of net.places) {
    nodes.push({
      id: place,
      kind: 'place',
      tokens: tokensOf(config, place),
      created: false,
      guard: '',
      linkOps: [],
    });
  }
  for (const place of config.places) {
    if (declared.has(place)) continue;
    nodes.push({
      id: place,
      kind: 'place',
      tokens: tokensOf(config, place),
      created: true,
      guard: '',
      linkOps: [],
    });
  }
  for (const variable of net.variables) {
    nodes.push({
      id: variable,
      kind: 'virtual',
      tokens: [],
      created: false,
      guard: '',
      linkOps: [],
    });
  }
  for (const transition of net.transitions) {
    nodes.push({
      id: transition.name,
      kind: 'transition',
      tokens: [],
      created: false,
      guard: transition.guard === 'true' ? '' : transition.guard,
      linkOps: transition.link.map((c) =>
        c.condition === 'true'
          ? `${c.direction}${c.variable}`
          : `${c.condition} => ${c.direction}${c.variable}`,
      ),
    });
  }

  const edges: GraphEdge[] = net.arcs.map((arc) => ({
    from: arc.from,
    to: arc.to,
    label: arc.weight === 'empty' ? '' : arc.weight,
    virtual: arc.virtual,
  }));

  return { nodes, edges };
}
