import { ExplorerApi } from "./api.js";
import { Explorer } from "./view.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`missing element #${id}`);
  return el as T;
}

async function boot(): Promise<void> {
  const api = new ExplorerApi("");
  const explorer = new Explorer(api, {
    svg: byId<HTMLElement>("quiver") as unknown as SVGSVGElement,
    banner: byId("banner"),
    history: byId("history"),
    toasts: byId("toasts"),
    undoButton: byId<HTMLButtonElement>("undo"),
  });

  const familySelect = byId<HTMLSelectElement>("family");
  const levelInput = byId<HTMLInputElement>("level");
  const raysInput = byId<HTMLInputElement>("rays");
  const loadButton = byId<HTMLButtonElement>("load-family");
  const uploadInput = byId<HTMLInputElement>("upload");

  for (const fam of await api.families()) {
    const opt = document.createElement("option");
    opt.value = fam.name;
    opt.textContent = fam.name;
    familySelect.appendChild(opt);
  }

  loadButton.addEventListener("click", () => {
    const params =
      familySelect.value === "star" ? { rays: Number(raysInput.value) } : undefined;
    void explorer.loadFamily(familySelect.value, Number(levelInput.value), params);
  });

  uploadInput.addEventListener("change", () => {
    const file = uploadInput.files?.[0];
    if (!file) return;
    void file.text().then((text) => {
      try {
        return explorer.loadQuiver(JSON.parse(text));
      } catch (err) {
        explorer.toast(`invalid JSON: ${err}`);
      }
    });
  });
}

void boot();
