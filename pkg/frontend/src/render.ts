/**
 * SVG rendering of the net graph.
 *
 * Solid places are circles with their tokens listed beneath, virtual
 * places are dashed circles, transitions are boxes with guard/link
 * annotations.  Arcs touching a virtual place are dashed.  Nodes can
 * be dragged; the override positions live only in memory and are never
 * persisted.  Firing feedback: the momentarily solid arcs flash as
 * overlay edges and created places pulse.
 */

import type { NetGraph, GraphNode } from './graph.js';
import type { Point } from './layout.js';
import { layoutGraph } from './layout.js';
import type { EventJson } from './types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';
const PLACE_RADIUS = 26;
const TRANSITION_WIDTH = 54;
const TRANSITION_HEIGHT = 34;
const FLASH_MILLIS = 700;

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
): SVGElementTagNameMap[K] {
  return document.createElementNS(SVG_NS, tag);
}

function text(
  content: string,
  x: number,
  y: number,
  cssClass: string,
): SVGTextElement {
  const el = svgEl('text');
  el.setAttribute('x', String(x));
  el.setAttribute('y', String(y));
  el.setAttribute('class', cssClass);
  el.textContent = content;
  return el;
}

export class GraphView {
  private readonly svg: SVGSVGElement;
  /** Manual drag overrides by node id (in-memory only). */
  private readonly dragged = new Map<string, Point>();
  private positions = new Map<string, Point>();
  private graph: NetGraph = { nodes: [], edges: [] };

  constructor(host: HTMLElement) {
    this.svg = svgEl('svg');
    this.svg.setAttribute('class', 'net-graph');
    host.appendChild(this.svg);
  }

  /** Current drawing position of a node (drag override or layout). */
  positionOf(id: string): Point | undefined {
    return this.dragged.get(id) ?? this.positions.get(id);
  }

  /** Replace the drawn graph; keeps drag overrides for surviving nodes. */
  update(graph: NetGraph): void {
    this.graph = graph;
    const layout = layoutGraph(graph);
    this.positions = layout.positions;
    for (const id of [...this.dragged.keys()]) {
      if (!layout.positions.has(id)) this.dragged.delete(id);
    }
    this.svg.setAttribute(
      'viewBox',
      `0 0 ${layout.width} ${layout.height}`,
    );
    this.svg.setAttribute('width', String(layout.width));
    this.svg.setAttribute('height', String(layout.height));
    this.draw();
  }

  private draw(): void {
    this.svg.replaceChildren(this.defs());
    for (const edge of this.graph.edges) {
      const from = this.positionOf(edge.from);
      const to = this.positionOf(edge.to);
      if (!from || !to) continue;
      this.svg.appendChild(this.drawEdge(edge.from, edge.to, from, to, {
        cssClass: edge.virtual ? 'arc virtual' : 'arc',
        label: edge.label,
      }));
    }
    for (const node of this.graph.nodes) {
      const at = this.positionOf(node.id);
      if (at) this.svg.appendChild(this.drawNode(node, at));
    }
  }

  private defs(): SVGDefsElement {
    const defs = svgEl('defs');
    const marker = svgEl('marker');
    marker.setAttribute('id', 'arrow');
    marker.setAttribute('viewBox', '0 0 10 10');
    marker.setAttribute('refX', '9');
    marker.setAttribute('refY', '5');
    marker.setAttribute('markerWidth', '7');
    marker.setAttribute('markerHeight', '7');
    marker.setAttribute('orient', 'auto-start-reverse');
    const tip = svgEl('path');
    tip.setAttribute('d', 'M 0 0 L 10 5 L 0 10 z');
    tip.setAttribute('class', 'arrow-tip');
    marker.appendChild(tip);
    defs.appendChild(marker);
    return defs;
  }

  private drawEdge(
    fromId: string,
    toId: string,
    from: Point,
    to: Point,
    opts: { cssClass: string; label: string },
  ): SVGGElement {
    const group = svgEl('g');
    group.setAttribute('data-edge', `${fromId}->${toId}`);
    const dx = to.x - from.x;
    const dy = to.y - from.y;
    const span = Math.hypot(dx, dy) || 1;
    // Trim the line so the arrowhead meets the node border.
    const trimFrom = PLACE_RADIUS + 3;
    const trimTo = PLACE_RADIUS + 6;
    const x1 = from.x + (dx / span) * trimFrom;
    const y1 = from.y + (dy / span) * trimFrom;
    const x2 = to.x - (dx / span) * trimTo;
    const y2 = to.y - (dy / span) * trimTo;
    const line = svgEl('line');
    line.setAttribute('x1', String(x1));
    line.setAttribute('y1', String(y1));
    line.setAttribute('x2', String(x2));
    line.setAttribute('y2', String(y2));
    line.setAttribute('class', opts.cssClass);
    line.setAttribute('marker-end', 'url(#arrow)');
    group.appendChild(line);
    if (opts.label) {
      group.appendChild(
        text(opts.label, (x1 + x2) / 2, (y1 + y2) / 2 - 6, 'arc-label'),
      );
    }
    return group;
  }

  private drawNode(node: GraphNode, at: Point): SVGGElement {
    const group = svgEl('g');
    group.setAttribute('data-node', node.id);
    group.setAttribute('data-kind', node.kind);
    group.setAttribute('transform', `translate(${at.x}, ${at.y})`);
    const classes = ['node', node.kind];
    if (node.created) classes.push('created');
    group.setAttribute('class', classes.join(' '));

    if (node.kind === 'transition') {
      const box = svgEl('rect');
      box.setAttribute('x', String(-TRANSITION_WIDTH / 2));
      box.setAttribute('y', String(-TRANSITION_HEIGHT / 2));
      box.setAttribute('width', String(TRANSITION_WIDTH));
      box.setAttribute('height', String(TRANSITION_HEIGHT));
      box.setAttribute('rx', '4');
      group.appendChild(box);
      group.appendChild(text(node.id, 0, 5, 'node-label'));
      const notes: string[] = [];
      if (node.guard) notes.push(`[${node.guard}]`);
      if (node.linkOps.length > 0) notes.push(`link: ${node.linkOps.join(', ')}`);
      if (notes.length > 0) {
        group.appendChild(
          text(notes.join('  '), 0, TRANSITION_HEIGHT / 2 + 16, 'node-note'),
        );
      }
    } else {
      const circle = svgEl('circle');
      circle.setAttribute('r', String(PLACE_RADIUS));
      group.appendChild(circle);
      group.appendChild(text(node.id, 0, 5, 'node-label'));
      if (node.tokens.length > 0) {
        group.appendChild(
          text(
            node.tokens.join(', '),
            0,
            PLACE_RADIUS + 16,
            'token-label',
          ),
        );
      }
    }

    this.makeDraggable(group, node.id);
    return group;
  }

  private makeDraggable(group: SVGGElement, id: string): void {
    group.addEventListener('pointerdown', (down: PointerEvent) => {
      down.preventDefault();
      const origin = this.positionOf(id);
      if (!origin) return;
      const startX = down.clientX;
      const startY = down.clientY;
      const move = (ev: PointerEvent) => {
        const at = {
          x: origin.x + (ev.clientX - startX),
          y: origin.y + (ev.clientY - startY),
        };
        this.dragged.set(id, at);
        group.setAttribute('transform', `translate(${at.x}, ${at.y})`);
      };
      const up = () => {
        window.removeEventListener('pointermove', move);
        window.removeEventListener('pointerup', up);
        this.draw(); // re-route arcs to the dragged position
      };
      window.addEventListener('pointermove', move);
      window.addEventListener('pointerup', up);
    });
  }

  /**
   * Flash the arcs a firing made momentarily solid and pulse any
   * created places.  Overlay edges are removed after the flash.
   */
  animateFiring(event: EventJson): void {
    for (const arc of event.solidArcs) {
      const from = this.positionOf(arc.from);
      const to = this.positionOf(arc.to);
      if (!from || !to) continue;
      const overlay = this.drawEdge(arc.from, arc.to, from, to, {
        cssClass: 'arc solid-flash',
        label: '',
      });
      overlay.setAttribute('data-flash', `${arc.from}->${arc.to}`);
      this.svg.appendChild(overlay);
      setTimeout(() => overlay.remove(), FLASH_MILLIS);
    }
    for (const place of event.newPlaces) {
      const group = this.svg.querySelector(
        `g[data-node="${place}"]`,
      );
      if (!group) continue;
      group.classList.add('flash');
      setTimeout(() => group.classList.remove('flash'), FLASH_MILLIS);
    }
  }

  get element(): SVGSVGElement {
    return this.svg;
  }
}
