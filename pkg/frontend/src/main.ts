// DOM wiring: tabs, inputs, and result panes. All chemistry lives on
// the server; this file only moves payloads into render functions.

import { ApiClient, isAbort } from "./api.js";
import {
  renderCompound,
  renderError,
  renderHits,
  renderLoading,
  renderPrediction,
} from "./render.js";
import { ApiError } from "./types.js";

const api = new ApiClient("..");  // UI lives under /ui/, API under /api/

const REPREDICT_DELAY_MS = 350;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const results = () => el<HTMLDivElement>("results");
const detail = () => el<HTMLDivElement>("detail");

function showError(err: unknown, target: HTMLElement): void {
  if (isAbort(err)) return; // superseded by a newer request
  if (err instanceof ApiError) {
    target.innerHTML = renderError(err.detail);
  } else {
    target.innerHTML = renderError({
      code: "network_error",
      message: String(err),
    });
  }
}

function wireViewLinks(container: HTMLElement): void {
  container.querySelectorAll<HTMLAnchorElement>(".view-link").forEach((a) => {
    a.addEventListener("click", async (ev) => {
      ev.preventDefault();
      const id = a.dataset.id;
      if (!id) return;
      detail().innerHTML = renderLoading();
      try {
        detail().innerHTML = renderCompound(await api.compound(id));
        detail().scrollIntoView({ behavior: "smooth" });
      } catch (err) {
        showError(err, detail());
      }
    });
  });
}

async function runQuickSearch(): Promise<void> {
  const q = el<HTMLInputElement>("quick-query").value.trim();
  if (!q) {
    results().innerHTML = renderError({
      code: "empty_query",
      message: "Type a name, formula, molecular ID, or CASRN first.",
    });
    return;
  }
  results().innerHTML = renderLoading();
  try {
    const resp = await api.quickSearch(q);
    results().innerHTML = renderHits(resp);
    wireViewLinks(results());
  } catch (err) {
    showError(err, results());
  }
}

async function runAdvancedSearch(): Promise<void> {
  const read = (id: string) => el<HTMLInputElement>(id).value.trim();
  const filters: Record<string, unknown> = {};
  if (read("adv-name")) filters.name = read("adv-name");
  if (read("adv-formula")) filters.formula = read("adv-formula");
  const state = el<HTMLSelectElement>("adv-state").value;
  if (state) filters.physical_state = state;
  if (read("adv-mw-min")) filters.weight_min = Number(read("adv-mw-min"));
  if (read("adv-mw-max")) filters.weight_max = Number(read("adv-mw-max"));
  if (read("adv-class")) filters.class = read("adv-class");
  const tags = Array.from(
    document.querySelectorAll<HTMLInputElement>("#adv-tags input:checked"),
  ).map((c) => c.value);
  if (tags.length) filters.characteristics = tags;

  results().innerHTML = renderLoading();
  try {
    const resp = await api.advancedSearch(filters);
    results().innerHTML = renderHits(resp);
    wireViewLinks(results());
  } catch (err) {
    showError(err, results());
  }
}

async function runStructureSearch(): Promise<void> {
  const smiles = el<HTMLInputElement>("struct-smiles").value.trim();
  const threshold = Number(el<HTMLSelectElement>("struct-threshold").value);
  const substructure = el<HTMLInputElement>("struct-substructure").checked;
  results().innerHTML = renderLoading();
  try {
    const resp = substructure
      ? await api.substructureSearch(smiles)
      : await api.similaritySearch(smiles, threshold);
    results().innerHTML = renderHits(resp);
    wireViewLinks(results());
  } catch (err) {
    showError(err, results());
  }
}

async function runPredict(): Promise<void> {
  const text = el<HTMLInputElement>("predict-input").value.trim();
  const asName = el<HTMLInputElement>("predict-as-name").checked;
  const trans = Number(el<HTMLInputElement>("predict-trans").value) || 0;
  if (!text) return;
  const pane = el<HTMLDivElement>("predict-result");
  pane.innerHTML = renderLoading();
  try {
    const resp = await api.predict(
      asName
        ? { name: text, trans_ring_double_bonds: trans }
        : { smiles: text, trans_ring_double_bonds: trans },
    );
    pane.innerHTML = renderPrediction(resp);
    wireViewLinks(pane);
  } catch (err) {
    showError(err, pane);
  }
}

function selectTab(name: string): void {
  document.querySelectorAll<HTMLElement>(".tab-pane").forEach((p) => {
    p.hidden = p.id !== `tab-${name}`;
  });
  document.querySelectorAll<HTMLButtonElement>("nav button").forEach((b) => {
    b.classList.toggle("active", b.dataset.tab === name);
  });
}

export function init(): void {
  document.querySelectorAll<HTMLButtonElement>("nav button").forEach((b) => {
    b.addEventListener("click", () => selectTab(b.dataset.tab ?? "quick"));
  });

  el<HTMLFormElement>("quick-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    void runQuickSearch();
  });
  el<HTMLFormElement>("adv-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    void runAdvancedSearch();
  });
  el<HTMLFormElement>("struct-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    void runStructureSearch();
  });
  el<HTMLFormElement>("predict-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    void runPredict();
  });

  // What-if loop: editing the structure re-predicts in place, no
  // reload; the API client aborts the superseded request.
  let timer: ReturnType<typeof setTimeout> | undefined;
  const schedule = () => {
    clearTimeout(timer);
    timer = setTimeout(() => void runPredict(), REPREDICT_DELAY_MS);
  };
  el<HTMLInputElement>("predict-input").addEventListener("input", schedule);
  el<HTMLInputElement>("predict-trans").addEventListener("input", schedule);

  selectTab("quick");
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", init);
}
