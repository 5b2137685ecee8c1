// Pure payload -> HTML string functions. The UI performs no chemistry:
// every value is rendered from the API payload. Stored values are
// printed verbatim via fmt(); the single place estimates get display
// rounding (one decimal) is fmtEstimate() below.

import {
  ApiErrorDetail,
  CompoundOut,
  HitOut,
  PredictionResponse,
  SearchResponse,
  ThermoValueOut,
} from "./types.js";

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Verbatim numeric rendering: no rounding beyond what the API sent. */
export function fmt(value: number | null | undefined): string {
  return value === null || value === undefined ? "n.a." : String(value);
}

/** Estimates display with one decimal; the only client-side rounding. */
export function fmtEstimate(value: number): string {
  return value.toFixed(1);
}

function valueWithUncertainty(tv: ThermoValueOut | undefined): string {
  if (!tv) return "n.a. &nbsp; Uncertainty: n.a.";
  return `${fmt(tv.value)} &nbsp; Uncertainty: ${fmt(tv.uncertainty ?? null)}`;
}

function byKind(thermo: ThermoValueOut[]): Map<string, ThermoValueOut> {
  return new Map(thermo.map((t) => [t.kind, t]));
}

export function renderHits(resp: SearchResponse): string {
  const head = `
    <div class="query-desc">
      <p>You are searching for: <strong>${esc(resp.query)}</strong> <span class="mode">[${esc(resp.mode)}]</span></p>
      ${resp.warning ? `<p class="warning">${esc(resp.warning)}</p>` : ""}
      <p>Number of compounds found: <strong>${resp.count}</strong></p>
    </div>`;
  if (!resp.hits.length) {
    return head + `<p class="empty">No compounds matched.</p>`;
  }
  const rows = resp.hits.slice(0, 100).map(renderHit).join("");
  return head + `<ul class="hits">${rows}</ul>`;
}

function renderHit(hit: HitOut): string {
  const sim =
    hit.similarity !== null && hit.similarity !== undefined
      ? `<span class="sim">similarity ${hit.similarity.toFixed(3)}</span>`
      : "";
  const phonetic = hit.phonetic ? `<span class="sim">phonetic match</span>` : "";
  return `
    <li class="hit">
      <div>
        <span class="hit-id">${esc(hit.molecular_id)}</span>
        <strong>${esc(hit.name)}</strong> ${sim} ${phonetic}
      </div>
      <div class="hit-fields">
        Molecular Formula: ${esc(hit.formula)} ·
        CAS Registry Number: ${esc(hit.casrn ?? "n.a.")} ·
        SMILES: <code>${esc(hit.smiles)}</code>
      </div>
      <a href="#" class="view-link" data-id="${esc(hit.molecular_id)}">View</a>
    </li>`;
}

export function renderCompound(c: CompoundOut): string {
  const t = byKind(c.thermo);
  const synonyms = c.synonyms.length ? esc(c.synonyms.join("; ")) : "n.a.";
  const refs = c.references.length
    ? c.references.map((r) => `<li>${esc(r)}</li>`).join("")
    : "<li>n.a.</li>";
  return `
  <article class="detail">
    <h2>${esc(c.name)}</h2>
    <section>
      <h3>Structural Data</h3>
      <table class="kv">
        <tr><td>Molecular ID</td><td>${esc(c.molecular_id)}</td></tr>
        <tr><td>Other Names</td><td>${synonyms}</td></tr>
        <tr><td>CASRN</td><td>${esc(c.casrn ?? "n.a.")}</td></tr>
        <tr><td>Molecular Formula</td><td>${esc(c.formula)}</td></tr>
        <tr><td>Molecular Weight</td><td>${fmt(c.weight)}</td></tr>
        <tr><td>Physical State</td><td>${esc(c.physical_state)}</td></tr>
        <tr><td>SMILES</td><td><code>${esc(c.smiles)}</code></td></tr>
        <tr><td>Unique SMILES</td><td><code>${esc(c.usmiles)}</code></td></tr>
        <tr><td>Class</td><td>${esc(c.class || "n.a.")}</td></tr>
        <tr><td>Sub-Class</td><td>${esc(c.subclass || "n.a.")}</td></tr>
        <tr><td>Family</td><td>${esc(c.family || "n.a.")}</td></tr>
        <tr><td>Characteristics</td><td>${esc(c.characteristics.join(", ") || "n.a.")}</td></tr>
      </table>
    </section>
    <section>
      <h3>Thermochemical Data</h3>
      <p>Standard Molar Enthalpy of Formation at 298.15 K [kJ/mol]:</p>
      <ul>
        <li>Crystalline Phase: ${valueWithUncertainty(t.get("formation_crystal"))}</li>
        <li>Liquid Phase: ${valueWithUncertainty(t.get("formation_liquid"))}</li>
        <li>Gas Phase: ${valueWithUncertainty(t.get("formation_gas"))}</li>
      </ul>
      <p>Standard Molar Enthalpy of Phase Change at 298.15 K [kJ/mol]:</p>
      <ul>
        <li>Solid - Liquid: ${valueWithUncertainty(t.get("fusion"))}</li>
        <li>Liquid - Gas: ${valueWithUncertainty(t.get("vaporization"))}</li>
        <li>Solid - Gas: ${valueWithUncertainty(t.get("sublimation"))}</li>
      </ul>
    </section>
    ${c.observations ? `<section><h3>Observations</h3><p>${esc(c.observations)}</p></section>` : ""}
    <section>
      <h3>References</h3>
      <ul>${refs}</ul>
    </section>
  </article>`;
}

export function renderPrediction(p: PredictionResponse): string {
  const expByKind = byKind(p.experimental ?? []);
  const estRow = (phase: string) => {
    const est = p.estimates.find((e) => e.phase === phase);
    if (!est) return "n.a.";
    if (est.value === null) {
      return `not covered (missing: ${esc(est.missing_codes.join(", "))})`;
    }
    return fmtEstimate(est.value);
  };
  const expRow = (kind: string) => fmt(expByKind.get(kind)?.value ?? null);

  const paramRows = p.feature_rows
    .map(
      (r) => `
      <tr>
        <td><code>${esc(r.code)}</code></td>
        <td class="num">${r.frequency}</td>
        <td>${esc(r.description)}</td>
      </tr>`,
    )
    .join("");

  const isomers = p.isomers.length
    ? `<section>
        <h3>Compounds with formula ${esc(p.formula)} in the database: ${p.isomers.length}</h3>
        <ul class="hits">${p.isomers.map(renderHit).join("")}</ul>
      </section>`
    : "";

  return `
  <article class="prediction">
    <div class="query-desc">
      <p>You are predicting properties for:</p>
      <p>SMILES: <code>${esc(p.smiles)}</code>
         ${p.name ? ` · Compound Name: <strong>${esc(p.name)}</strong>` : ""}</p>
      <p>Molecular Formula: ${esc(p.formula)} · Molecular Weight: ${fmt(p.weight)}</p>
    </div>
    <section>
      <h3>Standard Molar Enthalpy of Formation at 298.15 K [kJ/mol]</h3>
      <table class="est">
        <tr><th></th><th>Gas-phase</th><th>Liquid-phase</th></tr>
        <tr><td>Experimental</td>
            <td class="num">${expRow("formation_gas")}</td>
            <td class="num">${expRow("formation_liquid")}</td></tr>
        <tr><td>Estimated</td>
            <td class="num">${estRow("gas")}</td>
            <td class="num">${estRow("liquid")}</td></tr>
      </table>
    </section>
    <section>
      <h3>Parameters used to predict properties of <code>${esc(p.smiles)}</code></h3>
      <table class="params">
        <tr><th>Parameter</th><th>Used Frequency</th><th>Short Description</th></tr>
        ${paramRows}
      </table>
    </section>
    ${isomers}
  </article>`;
}

export function renderError(detail: ApiErrorDetail): string {
  const reasons = detail.reasons?.length
    ? `<ul>${detail.reasons.map((r) => `<li>${esc(r)}</li>`).join("")}</ul>`
    : "";
  return `
  <div class="error">
    <p><strong>${esc(detail.code)}</strong>: ${esc(detail.message)}</p>
    ${reasons}
  </div>`;
}

export function renderLoading(): string {
  return `<p class="loading">Working&hellip;</p>`;
}
