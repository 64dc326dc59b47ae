// The explorer view: renders the session state as SVG, wires clicks to
// mutate calls, and keeps the banner / history strip / toasts in sync.
// The view is a pure projection of the latest server response; no
// mutation logic runs in the client, and at most one request is in
// flight at a time (controls are disabled while pending).

import { ApiError, ExplorerApi, type SessionState } from "./api.js";
import { companionOf, computeLayout, type Positions } from "./layout.js";

const STATUS_COLORS: Record<string, string> = {
  green: "#2ecc71",
  red: "#e74c3c",
  mixed: "#f39c12",
  isolated: "#2ecc71",
};

const SVGNS = "http://www.w3.org/2000/svg";

export interface ExplorerElements {
  svg: SVGSVGElement;
  banner: HTMLElement;
  history: HTMLElement;
  toasts: HTMLElement;
  undoButton: HTMLButtonElement;
}

export class Explorer {
  private state: SessionState | null = null;
  private positions: Positions | null = null;
  private busy = false;

  constructor(
    private readonly api: ExplorerApi,
    private readonly el: ExplorerElements,
    private readonly width = 760,
    private readonly height = 520,
  ) {
    this.el.undoButton.addEventListener("click", () => void this.undo());
  }

  get sessionId(): string | null {
    return this.state?.id ?? null;
  }

  get pending(): boolean {
    return this.busy;
  }

  async loadQuiver(doc: unknown): Promise<void> {
    await this.guarded(async () => {
      this.adopt(await this.api.createSession(doc), true);
    });
  }

  async loadFamily(
    name: string,
    level: number,
    params?: Record<string, number>,
  ): Promise<void> {
    await this.guarded(async () => {
      this.adopt(await this.api.createFromFamily(name, level, params), true);
    });
  }

  async clickVertex(id: string): Promise<void> {
    if (this.state === null) return;
    const vertex = this.state.vertices.find((v) => v.id === id);
    if (vertex?.frozen) {
      this.toast(`vertex ${id} is frozen; mutation is not allowed`);
      return;
    }
    const sid = this.state.id;
    await this.guarded(async () => {
      this.adopt(await this.api.mutate(sid, id), false);
    });
  }

  async undo(): Promise<void> {
    if (this.state === null) return;
    const sid = this.state.id;
    await this.guarded(async () => {
      this.adopt(await this.api.undo(sid), false);
    });
  }

  async refresh(): Promise<void> {
    if (this.state === null) return;
    const sid = this.state.id;
    await this.guarded(async () => {
      this.adopt(await this.api.getState(sid), false);
    });
  }

  private async guarded(work: () => Promise<void>): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    this.el.undoButton.disabled = true;
    try {
      await work();
    } catch (err) {
      this.toast(err instanceof ApiError ? err.message : String(err));
    } finally {
      this.busy = false;
      this.el.undoButton.disabled = this.state === null;
      this.render();
    }
  }

  private adopt(state: SessionState, fresh: boolean): void {
    this.state = state;
    // layout once per session, then keep vertices pinned
    if (fresh || this.positions === null) {
      this.positions = computeLayout(state, this.width, this.height);
    }
  }

  toast(message: string): void {
    const node = document.createElement("div");
    node.className = "toast";
    node.textContent = message;
    this.el.toasts.appendChild(node);
    setTimeout(() => node.remove(), 4000);
  }

  render(): void {
    const svg = this.el.svg;
    while (svg.firstChild) svg.removeChild(svg.firstChild);
    if (this.state === null || this.positions === null) return;
    const pos = this.positions;

    svg.appendChild(makeArrowheadDefs());
    for (const arrow of this.state.arrows) {
      const a = pos.get(arrow.from);
      const b = pos.get(arrow.to);
      if (!a || !b) continue;
      const line = document.createElementNS(SVGNS, "line");
      const trimmed = shorten(a.x, a.y, b.x, b.y, 16);
      line.setAttribute("x1", String(trimmed.x1));
      line.setAttribute("y1", String(trimmed.y1));
      line.setAttribute("x2", String(trimmed.x2));
      line.setAttribute("y2", String(trimmed.y2));
      line.setAttribute("class", "arrow");
      line.setAttribute("marker-end", "url(#arrowhead)");
      svg.appendChild(line);
      if (arrow.weight >= 2) {
        const badge = document.createElementNS(SVGNS, "text");
        badge.setAttribute("x", String((a.x + b.x) / 2 + 6));
        badge.setAttribute("y", String((a.y + b.y) / 2 - 6));
        badge.setAttribute("class", "weight-badge");
        badge.textContent = `×${arrow.weight}`;
        svg.appendChild(badge);
      }
    }

    for (const v of this.state.vertices) {
      const p = pos.get(v.id);
      if (!p) continue;
      const g = document.createElementNS(SVGNS, "g");
      g.setAttribute("class", v.frozen ? "vertex frozen" : "vertex mutable");
      g.setAttribute("data-vertex", v.id);
      if (v.frozen) {
        const rect = document.createElementNS(SVGNS, "rect");
        rect.setAttribute("x", String(p.x - 11));
        rect.setAttribute("y", String(p.y - 11));
        rect.setAttribute("width", "22");
        rect.setAttribute("height", "22");
        rect.setAttribute("fill", "#ecf0f1");
        rect.setAttribute("stroke", "#7f8c8d");
        g.appendChild(rect);
      } else {
        const circle = document.createElementNS(SVGNS, "circle");
        circle.setAttribute("cx", String(p.x));
        circle.setAttribute("cy", String(p.y));
        circle.setAttribute("r", "14");
        circle.setAttribute("fill", STATUS_COLORS[v.status ?? "isolated"]);
        circle.setAttribute("stroke", "#2c3e50");
        g.appendChild(circle);
      }
      const label = document.createElementNS(SVGNS, "text");
      label.setAttribute("x", String(p.x));
      label.setAttribute("y", String(p.y + 4));
      label.setAttribute("class", "vertex-label");
      label.textContent = v.id;
      g.appendChild(label);
      g.addEventListener("click", () => void this.clickVertex(v.id));
      svg.appendChild(g);
    }

    this.el.history.textContent = this.state.history.length
      ? `history: (${this.state.history.join(", ")})`
      : "history: (empty)";

    if (this.state.all_red) {
      this.el.banner.textContent = `reddening sequence found: (${this.state.history.join(", ")})`;
      this.el.banner.classList.remove("hidden");
    } else {
      this.el.banner.textContent = "";
      this.el.banner.classList.add("hidden");
    }
  }
}

function makeArrowheadDefs(): SVGDefsElement {
  const defs = document.createElementNS(SVGNS, "defs");
  const marker = document.createElementNS(SVGNS, "marker");
  marker.setAttribute("id", "arrowhead");
  marker.setAttribute("markerWidth", "8");
  marker.setAttribute("markerHeight", "8");
  marker.setAttribute("refX", "7");
  marker.setAttribute("refY", "3");
  marker.setAttribute("orient", "auto");
  const path = document.createElementNS(SVGNS, "path");
  path.setAttribute("d", "M0,0 L7,3 L0,6 z");
  path.setAttribute("fill", "#34495e");
  marker.appendChild(path);
  defs.appendChild(marker);
  return defs;
}

function shorten(
  x1: number,
  y1: number,
  x2: number,
  y2: number,
  margin: number,
): { x1: number; y1: number; x2: number; y2: number } {
  const dx = x2 - x1;
  const dy = y2 - y1;
  const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
  const ux = dx / d;
  const uy = dy / d;
  return {
    x1: x1 + ux * margin,
    y1: y1 + uy * margin,
    x2: x2 - ux * margin,
    y2: y2 - uy * margin,
  };
}

export { companionOf };
