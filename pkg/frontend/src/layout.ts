/**
 * Automatic layered (left-to-right) layout for the net graph.
 *
 * Deterministic and dependency-free: rank by longest path from the
 * sources, order each layer by predecessor barycenter with stable
 * name tie-breaks, then space rows evenly.  Cycles are handled by
 * capping rank relaxation, so every net lays out.
 */

import type { NetGraph } from './graph.js';

export interface Point {
  x: number;
  y: number;
}

export interface Layout {
  positions: Map<string, Point>;
  width: number;
  height: number;
}

// Layout constants
const COLUMN_SPACING = 170;
const ROW_SPACING = 96;
const MARGIN_X = 90;
const MARGIN_Y = 70;

/**
 * Longest-path ranks.  Sources (no incoming edges) sit at rank 0;
 * relaxation is bounded by the node count so cycles terminate.
 */
export function assignRanks(
  ids: string[],
  edges: { from: string; to: string }[],
): Map<string, number> {
  const rank = new Map<string, number>();
  const hasIncoming = new Set(edges.map((e) => e.to));
  for (const id of ids) rank.set(id, 0);

  const cap = ids.length;
  for (let pass = 0; pass < cap; pass += 1) {
    let changed = false;
    for (const edge of edges) {
      const from = rank.get(edge.from);
      const to = rank.get(edge.to);
      if (from === undefined || to === undefined) continue;
      const wanted = Math.min(from + 1, cap);
      if (wanted > to) {
        rank.set(edge.to, wanted);
        changed = true;
      }
    }
    if (!changed) break;
  }

  // Nodes nothing points at and that point at nothing share rank 0;
  // pull isolated sinks of pure cycles back into range deterministically.
  for (const id of ids) {
    if (!hasIncoming.has(id)) rank.set(id, 0);
  }
  return rank;
}

function sortLayer(
  layer: string[],
  score: Map<string, number>,
): string[] {
  return [...layer].sort((a, b) => {
    const sa = score.get(a) ?? 0;
    const sb = score.get(b) ?? 0;
    if (sa !== sb) return sa - sb;
    return a < b ? -1 : a > b ? 1 : 0;
  });
}

/** Compute node positions and the overall canvas size. */
export function layoutGraph(graph: NetGraph): Layout {
  const ids = graph.nodes.map((n) => n.id);
  const rank = assignRanks(ids, graph.edges);

  // Group into layers, initially ordered by name for determinism.
  const layers = new Map<number, string[]>();
  for (const id of [...ids].sort()) {
    const r = rank.get(id) ?? 0;
    const layer = layers.get(r);
    if (layer) layer.push(id);
    else layers.set(r, [id]);
  }
  const layerRanks = [...layers.keys()].sort((a, b) => a - b);

  // Two barycenter sweeps (forward then backward) to reduce crossings.
  const position = new Map<string, number>();
  const recordPositions = (layer: string[]) =>
    layer.forEach((id, i) => position.set(id, i));
  for (const r of layerRanks) recordPositions(layers.get(r)!);

  const preds = new Map<string, string[]>();
  const succs = new Map<string, string[]>();
  for (const edge of graph.edges) {
    (preds.get(edge.to) ?? preds.set(edge.to, []).get(edge.to)!).push(
      edge.from,
    );
    (succs.get(edge.from) ?? succs.set(edge.from, []).get(edge.from)!).push(
      edge.to,
    );
  }
  const barycenter = (
    id: string,
    neighbors: Map<string, string[]>,
  ): number => {
    const around = neighbors.get(id) ?? [];
    const known = around.filter((n) => position.has(n));
    if (known.length === 0) return position.get(id) ?? 0;
    return (
      known.reduce((sum, n) => sum + (position.get(n) ?? 0), 0) /
      known.length
    );
  };
  for (const r of layerRanks) {
    const score = new Map<string, number>();
    for (const id of layers.get(r)!) score.set(id, barycenter(id, preds));
    const ordered = sortLayer(layers.get(r)!, score);
    layers.set(r, ordered);
    recordPositions(ordered);
  }
  for (const r of [...layerRanks].reverse()) {
    const score = new Map<string, number>();
    for (const id of layers.get(r)!) score.set(id, barycenter(id, succs));
    const ordered = sortLayer(layers.get(r)!, score);
    layers.set(r, ordered);
    recordPositions(ordered);
  }

  const tallest = Math.max(
    1,
    ...layerRanks.map((r) => layers.get(r)!.length),
  );
  const height = MARGIN_Y * 2 + (tallest - 1) * ROW_SPACING;
  const width =
    MARGIN_X * 2 + (layerRanks.length > 0 ? layerRanks.length - 1 : 0) * COLUMN_SPACING;

  const positions = new Map<string, Point>();
  layerRanks.forEach((r, column) => {
    const layer = layers.get(r)!;
    const top = (height - (layer.length - 1) * ROW_SPACING) / 2;
    layer.forEach((id, row) => {
      positions.set(id, {
        x: MARGIN_X + column * COLUMN_SPACING,
        y: top + row * ROW_SPACING,
      });
    });
  });

  return { positions, width, height };
}
