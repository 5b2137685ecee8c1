"""Prediction pipeline: structure in, estimates plus context out.

Brings the parsing, descriptor, estimation, and store layers together
for the API and the CLI. Also owns table fitting from stored records
and local name resolution (an external name-to-structure resolver
exists only as an optional stub, disabled by default).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from thermobase.chem import canonical_form, molecular_formula, molecular_weight, parse_smiles
from thermobase.codebook import describe
from thermobase.elba import ElbaFeatureVector, check_domain, extract_features
from thermobase.records import CompoundRecord
from thermobase.store import Store
from thermobase.thermo import (
    FitReport,
    MissingParameterError,
    ParameterTable,
    Phase,
    ThermoKind,
    ThermoValue,
    estimate,
    fit_parameters,
)

_FORMATION_KIND = {
    Phase.GAS: ThermoKind.FORMATION_GAS,
    Phase.LIQUID: ThermoKind.FORMATION_LIQUID,
}


class NameResolutionError(LookupError):
    pass


# Stand-in for the external name-to-structure resolver service; only a
# few common names, enough to exercise the toggle.
_STUB_NAMES = {
    "ethylcyclohexane": "CCC1CCCCC1",
    "cyclohexane": "C1CCCCC1",
    "benzene": "c1ccccc1",
    "toluene": "Cc1ccccc1",
    "ethanol": "CCO",
}


def resolve_name(store: Store, name: str, allow_stub: bool = False) -> str:
    """Name -> SMILES against the local store's names and synonyms."""
    wanted = name.strip().lower()
    if not wanted:
        raise NameResolutionError("empty name")
    for rec in store.records:
        if any(n.lower() == wanted for n in rec.all_names()):
            return rec.smiles
    if allow_stub and wanted in _STUB_NAMES:
        return _STUB_NAMES[wanted]
    raise NameResolutionError(
        f"name {name!r} not found in the store"
        + ("" if allow_stub else " (external resolver stub disabled)")
    )


@dataclass(frozen=True)
class FeatureRow:
    code: str
    frequency: int
    description: str


@dataclass(frozen=True)
class PhaseEstimate:
    phase: Phase
    value: float | None = None
    missing_codes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Prediction:
    input_text: str
    smiles: str
    canonical_smiles: str
    formula: str
    weight: float
    name: str | None  # store name when the exact structure is stored
    features: ElbaFeatureVector
    feature_rows: tuple[FeatureRow, ...]
    estimates: tuple[PhaseEstimate, ...]
    experimental: tuple[ThermoValue, ...] | None
    isomers: tuple[CompoundRecord, ...]  # same molecular formula, stored


def predict(
    store: Store,
    tables: dict[Phase, ParameterTable],
    smiles: str | None = None,
    name: str | None = None,
    trans_ring_double_bonds: int = 0,
    allow_stub_resolver: bool = False,
) -> Prediction:
    """Full what-if prediction for one structure.

    Raises ChemError for unparseable input, OutOfDomainError outside
    the hydrocarbon domain, NameResolutionError for unknown names.
    """
    if smiles is None and name is None:
        raise ValueError("provide a SMILES string or a compound name")
    input_text = smiles if smiles is not None else (name or "")
    if smiles is None:
        smiles = resolve_name(store, name or "", allow_stub=allow_stub_resolver)

    mol = parse_smiles(smiles)
    usmiles = canonical_form(mol)
    features = extract_features(mol, trans_ring_double_bonds=trans_ring_double_bonds)
    rows = tuple(
        FeatureRow(code=c, frequency=n, description=describe(c))
        for c, n in features.counts.items()
    )

    estimates = []
    for phase in (Phase.GAS, Phase.LIQUID):
        table = tables.get(phase)
        if table is None:
            continue
        try:
            estimates.append(PhaseEstimate(phase=phase, value=estimate(features, table).value))
        except MissingParameterError as exc:
            estimates.append(PhaseEstimate(phase=phase, missing_codes=exc.missing))

    snap = store.snapshot()
    stored = snap.by_usmiles.get(usmiles)
    formula = str(molecular_formula(mol))
    isomers = tuple(
        r for r in snap.records if r.formula == formula
    )

    return Prediction(
        input_text=input_text,
        smiles=smiles,
        canonical_smiles=usmiles,
        formula=formula,
        weight=molecular_weight(mol),
        name=stored.name if stored else None,
        features=features,
        feature_rows=rows,
        estimates=tuple(estimates),
        experimental=stored.thermo if stored else None,
        isomers=isomers,
    )


def training_pairs(
    records: tuple[CompoundRecord, ...] | list[CompoundRecord], phase: Phase
) -> list[tuple[ElbaFeatureVector, ThermoValue]]:
    """In-domain compounds with an observed formation value for the phase."""
    kind = _FORMATION_KIND[phase]
    pairs = []
    for rec in records:
        tv = rec.thermo_value(kind)
        if tv is None:
            continue
        # the deposited notation, not usmiles: canonicalization drops the
        # stereo marks that carry cis-correction codes
        mol = parse_smiles(rec.smiles)
        if not check_domain(mol).in_domain:
            continue
        pairs.append((extract_features(mol), tv))
    return pairs


def fit_from_records(
    records, phase: Phase, dataset_id: str = ""
) -> FitReport:
    pairs = training_pairs(records, phase)
    if not pairs:
        raise ValueError(
            f"no in-domain training data with {phase.value}-phase formation values"
        )
    return fit_parameters(pairs, phase, dataset_id=dataset_id)


def load_or_fit_tables(store: Store, data_dir: str | None) -> dict[Phase, ParameterTable]:
    """Parameter tables from <data_dir>/tables/{gas,liquid}.json when
    present, otherwise refit from the store's own records."""
    tables: dict[Phase, ParameterTable] = {}
    for phase in (Phase.GAS, Phase.LIQUID):
        loaded = None
        if data_dir is not None:
            path = Path(data_dir) / "tables" / f"{phase.value}.json"
            if path.exists():
                loaded = ParameterTable.load(path)
        if loaded is None:
            try:
                loaded = fit_from_records(
                    store.records, phase, dataset_id="store-refit"
                ).fitted
            except ValueError:
                continue  # phase stays unavailable
        tables[phase] = loaded
    return tables
