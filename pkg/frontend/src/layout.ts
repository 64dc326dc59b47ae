// Force-directed layout, run to convergence once per session and then
// pinned: mutation must not make vertices jump around. Frozen
// companions are pinned at a fixed offset next to their mutable vertex.

import type { SessionState } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

export type Positions = Map<string, Point>;

const REPULSION = 4000;
const SPRING = 0.02;
const SPRING_LENGTH = 90;
const CENTERING = 0.01;
const ITERATIONS = 300;
const COMPANION_OFFSET = 34;

// frozen companions carry the prime decoration of their mutable vertex
export function companionOf(frozenId: string): string | null {
  return frozenId.endsWith("'") ? frozenId.slice(0, -1) : null;
}

function seedPositions(ids: string[], width: number, height: number): Positions {
  const pos: Positions = new Map();
  const n = Math.max(ids.length, 1);
  ids.forEach((id, i) => {
    // deterministic ring seed so layouts are reproducible
    const angle = (2 * Math.PI * i) / n;
    const r = Math.min(width, height) / 3;
    pos.set(id, {
      x: width / 2 + r * Math.cos(angle),
      y: height / 2 + r * Math.sin(angle),
    });
  });
  return pos;
}

export function computeLayout(
  state: SessionState,
  width: number,
  height: number,
): Positions {
  const mutableIds = state.vertices.filter((v) => !v.frozen).map((v) => v.id);
  const pos = seedPositions(mutableIds, width, height);
  const mutableSet = new Set(mutableIds);
  const springs = state.arrows.filter(
    (a) => mutableSet.has(a.from) && mutableSet.has(a.to),
  );

  for (let iter = 0; iter < ITERATIONS; iter++) {
    const force: Positions = new Map(mutableIds.map((id) => [id, { x: 0, y: 0 }]));
    for (let i = 0; i < mutableIds.length; i++) {
      for (let j = i + 1; j < mutableIds.length; j++) {
        const a = pos.get(mutableIds[i])!;
        const b = pos.get(mutableIds[j])!;
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const f = REPULSION / d2;
        const d = Math.sqrt(d2);
        const fa = force.get(mutableIds[i])!;
        const fb = force.get(mutableIds[j])!;
        fa.x += (f * dx) / d;
        fa.y += (f * dy) / d;
        fb.x -= (f * dx) / d;
        fb.y -= (f * dy) / d;
      }
    }
    for (const s of springs) {
      const a = pos.get(s.from)!;
      const b = pos.get(s.to)!;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const f = SPRING * (d - SPRING_LENGTH);
      const fa = force.get(s.from)!;
      const fb = force.get(s.to)!;
      fa.x += (f * dx) / d;
      fa.y += (f * dy) / d;
      fb.x -= (f * dx) / d;
      fb.y -= (f * dy) / d;
    }
    for (const id of mutableIds) {
      const p = pos.get(id)!;
      const f = force.get(id)!;
      f.x += (width / 2 - p.x) * CENTERING;
      f.y += (height / 2 - p.y) * CENTERING;
      const step = Math.min(1, 10 / (1 + iter * 0.05));
      p.x = clamp(p.x + f.x * step, 30, width - 30);
      p.y = clamp(p.y + f.y * step, 30, height - 30);
    }
  }

  // pin each frozen companion adjacent to its mutable vertex, nudged
  // away from the centroid so it sits on the outside
  let cx = 0;
  let cy = 0;
  for (const id of mutableIds) {
    cx += pos.get(id)!.x / mutableIds.length;
    cy += pos.get(id)!.y / mutableIds.length;
  }
  for (const v of state.vertices) {
    if (!v.frozen) continue;
    const partner = companionOf(v.id);
    const anchor = partner !== null ? pos.get(partner) : undefined;
    if (anchor === undefined) {
      pos.set(v.id, { x: width / 2, y: 30 });
      continue;
    }
    const dx = anchor.x - cx;
    const dy = anchor.y - cy;
    const d = Math.sqrt(dx * dx + dy * dy);
    // single vertex (or exactly central anchor): push up-right by default
    const ux = d > 1e-6 ? dx / d : Math.SQRT1_2;
    const uy = d > 1e-6 ? dy / d : -Math.SQRT1_2;
    pos.set(v.id, {
      x: clamp(anchor.x + COMPANION_OFFSET * ux, 12, width - 12),
      y: clamp(anchor.y + COMPANION_OFFSET * uy, 12, height - 12),
    });
  }
  return pos;
}

function clamp(v: number, lo: number, hi: number): number {
  return Math.min(Math.max(v, lo), hi);
}
