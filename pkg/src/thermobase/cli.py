"""Command-line client.

Thin wrapper over the core modules; ``--json`` output reuses the HTTP
API's serialization models so both surfaces emit identical shapes.
Exit codes: 0 success, 1 domain/data error, 2 usage error.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from thermobase.chem import ChemError
from thermobase.data import bundled_compounds_path
from thermobase.elba import ElbaError
from thermobase.prediction import (
    NameResolutionError,
    fit_from_records,
    load_or_fit_tables,
    predict,
)
from thermobase.records import guess_format, read_dataset, validate_casrn
from thermobase.search import SearchEngine, SearchError
from thermobase.service.models import (
    CompoundOut,
    HitOut,
    PredictionResponse,
    SearchResponse,
    StatsOut,
)
from thermobase.store import CompoundRecord, Store, StoreError
from thermobase.thermo import MissingParameterError, Phase

_DOMAIN_ERRORS = (
    ChemError,
    ElbaError,
    NameResolutionError,
    SearchError,
    StoreError,
    MissingParameterError,
    ValueError,
    OSError,
)


def handle_domain_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _DOMAIN_ERRORS as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


def _data_option(fn):
    return click.option(
        "--data",
        "data_dir",
        envvar="THERMOBASE_DATA_DIR",
        default="data",
        show_default=True,
        help="Store data directory.",
    )(fn)


def _store(data_dir: str) -> Store:
    return Store(data_dir)


@click.group()
def main():
    """Thermochemical compound store and enthalpy estimator."""


@main.command()
@click.argument("dataset", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--bundled", is_flag=True, help="Ingest the packaged fixture dataset.")
@_data_option
@click.option("--json", "as_json", is_flag=True)
@handle_domain_errors
def ingest(dataset, bundled, data_dir, as_json):
    """Load a compound dataset (JSON lines or CSV) into the store."""
    if bundled == bool(dataset):
        raise click.UsageError("give a DATASET path or --bundled, not both")
    if bundled:
        text = bundled_compounds_path().read_text()
        fmt, label = "jsonl", "bundled"
    else:
        text = Path(dataset).read_text(encoding="utf-8")
        fmt, label = guess_format(dataset), dataset
    rows = read_dataset(text, fmt)
    report = _store(data_dir).ingest(rows, dataset_id=str(label))
    if as_json:
        click.echo(json.dumps({
            "accepted": list(report.accepted_ids),
            "rejected": [
                {"line": r.line, "label": r.label, "reason": r.reason}
                for r in report.rejected
            ],
        }, indent=2))
        return
    click.echo(f"accepted {report.accepted} of {len(rows)} rows")
    for rej in report.rejected:
        click.echo(f"  rejected line {rej.line} ({rej.label}): {rej.reason}")


@main.command()
@click.argument("mode", type=click.Choice(
    ["quick", "name", "formula", "id", "casrn", "similarity", "substructure"]))
@click.argument("query")
@click.option("--threshold", type=int, default=100, show_default=True,
              help="Similarity threshold percent (70-100).")
@_data_option
@click.option("--json", "as_json", is_flag=True)
@handle_domain_errors
def search(mode, query, threshold, data_dir, as_json):
    """Search the store; MODE picks the query semantics."""
    engine = SearchEngine(_store(data_dir))
    warning = None
    if mode == "quick":
        mode, hits, warning = engine.quick_search(query)
    elif mode == "name":
        hits = engine.search_name(query)
    elif mode == "formula":
        hits = engine.search_formula(query)
    elif mode in ("id", "casrn"):
        hits, warning = engine.lookup(query)
    elif mode == "similarity":
        hits = engine.search_similarity(query, threshold / 100.0)
    else:
        hits = engine.search_substructure(query)

    resp = SearchResponse(
        mode=mode, query=query, count=len(hits), warning=warning,
        hits=[HitOut.of(h) for h in hits],
    )
    if as_json:
        click.echo(resp.model_dump_json(indent=2))
        return
    if warning:
        click.echo(f"warning: {warning}")
    click.echo(f"{resp.count} hit(s) [{mode}]")
    for h in resp.hits:
        sim = f"  sim={h.similarity:.3f}" if h.similarity is not None else ""
        click.echo(f"  {h.molecular_id}  {h.name}  {h.formula}  "
                   f"{h.casrn or '-'}  {h.smiles}{sim}")


@main.command("predict")
@click.argument("structure")
@click.option("--name", "is_name", is_flag=True,
              help="Treat STRUCTURE as a compound name, not SMILES.")
@click.option("--trans-ring", type=int, default=0, show_default=True,
              help="Double bonds in trans configuration inside an 8- or 12-ring.")
@click.option("--phase", type=click.Choice(["gas", "liquid", "both"]), default="both")
@_data_option
@click.option("--json", "as_json", is_flag=True)
@handle_domain_errors
def predict_cmd(structure, is_name, trans_ring, phase, data_dir, as_json):
    """Estimate formation enthalpies for a structure."""
    store = _store(data_dir)
    tables = load_or_fit_tables(store, data_dir)
    if phase != "both":
        tables = {p: t for p, t in tables.items() if p.value == phase}
    p = predict(
        store, tables,
        smiles=None if is_name else structure,
        name=structure if is_name else None,
        trans_ring_double_bonds=trans_ring,
    )
    resp = PredictionResponse.of(p)
    if as_json:
        click.echo(resp.model_dump_json(indent=2))
        return
    click.echo(f"SMILES: {resp.smiles}   canonical: {resp.canonical_smiles}")
    click.echo(f"formula: {resp.formula}   MW: {resp.weight:.5f}")
    if resp.name:
        click.echo(f"stored as: {resp.name}")
    for est in resp.estimates:
        if est.value is not None:
            click.echo(f"estimated formation enthalpy ({est.phase}): "
                       f"{est.value:.1f} kJ/mol")
        else:
            click.echo(f"no {est.phase} estimate; uncovered codes: "
                       f"{', '.join(est.missing_codes)}")
    if resp.experimental:
        click.echo("experimental values:")
        for tv in resp.experimental:
            unc = f" +- {tv.uncertainty}" if tv.uncertainty is not None else ""
            click.echo(f"  {tv.kind}: {tv.value}{unc} kJ/mol")
    click.echo("parameters used:")
    for row in resp.feature_rows:
        click.echo(f"  {row.code:12s} x{row.frequency:<3d} {row.description}")


@main.command()
@click.argument("dataset", type=click.Path(exists=True, dir_okay=False))
@click.option("--phase", type=click.Choice(["gas", "liquid"]), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@handle_domain_errors
def fit(dataset, phase, out):
    """Refit a parameter table from a dataset file."""
    text = Path(dataset).read_text(encoding="utf-8")
    rows = read_dataset(text, guess_format(dataset))
    records = [CompoundRecord.from_json(_normalized(row)) for row in rows]
    report = fit_from_records(records, Phase(phase), dataset_id=str(dataset))
    report.fitted.dump(out)
    click.echo(
        f"fitted {len(report.fitted.entries)} parameters from "
        f"{len(report.residuals)} compounds; MAD {report.mad:.2f} kJ/mol -> {out}"
    )
    if report.unidentifiable_codes:
        click.echo(f"unidentifiable codes: {', '.join(report.unidentifiable_codes)}")


def _normalized(row: dict) -> dict:
    from thermobase.chem import canonical_form, parse_smiles

    if not row.get("usmiles"):
        row = {**row, "usmiles": canonical_form(parse_smiles(row.get("smiles", "")))}
    return row


@main.command("validate-casrn")
@click.argument("casrn")
def validate_casrn_cmd(casrn):
    """Check a CAS registry number's format and check digit."""
    if validate_casrn(casrn):
        click.echo("valid")
    else:
        click.echo("invalid")
        sys.exit(1)


@main.command()
@_data_option
@click.option("--json", "as_json", is_flag=True)
@handle_domain_errors
def stats(data_dir, as_json):
    """Database statistics per category."""
    s = StatsOut.of(_store(data_dir).stats())
    if as_json:
        click.echo(s.model_dump_json(indent=2))
        return
    click.echo(f"compounds:   {s.compounds}")
    click.echo(f"synonyms:    {s.synonyms}")
    click.echo(f"with CASRN:  {s.casrn}")
    click.echo(f"classes/subclasses/families: {s.classes}/{s.subclasses}/{s.families}")
    click.echo(f"formation values:    {s.formation}")
    click.echo(f"phase-change values: {s.phase_change}")


@main.command()
@_data_option
@click.option("--json", "as_json", is_flag=True)
@handle_domain_errors
def audit(data_dir, as_json):
    """Re-check every stored record's invariants."""
    findings = _store(data_dir).audit()
    if as_json:
        click.echo(json.dumps(findings, indent=2))
        return
    if not findings:
        click.echo("audit clean")
        return
    for f in findings:
        click.echo(f"{f['molecular_id']}: {f['problem']}")
    sys.exit(1)


@main.command()
@click.argument("molecular_id")
@_data_option
@click.option("--json", "as_json", is_flag=True)
@handle_domain_errors
def show(molecular_id, data_dir, as_json):
    """Print one compound record."""
    rec = _store(data_dir).get(molecular_id)
    if rec is None:
        click.echo(f"error: no compound {molecular_id}", err=True)
        sys.exit(1)
    out = CompoundOut.of(rec)
    if as_json:
        click.echo(out.model_dump_json(indent=2, by_alias=True))
        return
    click.echo(f"{rec.molecular_id}  {rec.name} ({rec.formula}, MW {rec.weight})")
    click.echo(f"  SMILES {rec.smiles}   canonical {rec.usmiles}")
    click.echo(f"  CASRN {rec.casrn or '-'}   state {rec.physical_state}")
    for tv in rec.thermo:
        unc = f" +- {tv.uncertainty}" if tv.uncertainty is not None else ""
        click.echo(f"  {tv.kind.value}: {tv.value}{unc} kJ/mol")


@main.command()
@click.option("--port", type=int, default=None, help="Listen port.")
@click.option("--host", default="127.0.0.1", show_default=True)
@_data_option
@handle_domain_errors
def serve(port, host, data_dir):
    """Run the HTTP API (and web UI when built) as one process."""
    import uvicorn

    from thermobase.service import ServiceConfig, create_app

    config = ServiceConfig.from_env(data_dir=data_dir, port=port)
    app = create_app(config)
    uvicorn.run(app, host=host, port=config.port)


if __name__ == "__main__":
    main()
