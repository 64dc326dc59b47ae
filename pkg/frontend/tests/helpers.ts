import type { ExplorerElements } from "../src/view.js";
import type { SessionState } from "../src/api.js";

export function mountDom(): ExplorerElements {
  document.body.innerHTML = `
    <div id="banner" class="hidden"></div>
    <svg id="quiver" width="760" height="520"></svg>
    <div id="history"></div>
    <div id="toasts"></div>
    <button id="undo"></button>
  `;
  return {
    svg: document.getElementById("quiver") as unknown as SVGSVGElement,
    banner: document.getElementById("banner")!,
    history: document.getElementById("history")!,
    toasts: document.getElementById("toasts")!,
    undoButton: document.getElementById("undo") as HTMLButtonElement,
  };
}

export function singleVertexState(overrides: Partial<SessionState> = {}): SessionState {
  return {
    id: "s1",
    vertices: [
      { id: "1", status: "green", frozen: false },
      { id: "1'", status: null, frozen: true },
    ],
    arrows: [{ from: "1", to: "1'", weight: 1 }],
    history: [],
    all_red: false,
    ...overrides,
  };
}

export function clickVertex(svg: SVGSVGElement, id: string): boolean {
  const groups = svg.querySelectorAll("g.vertex");
  for (const g of groups) {
    if (g.getAttribute("data-vertex") === id) {
      g.dispatchEvent(new MouseEvent("click", { bubbles: true }));
      return true;
    }
  }
  return false;
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
