"""Enthalpy estimation, parameter refitting, and consistency checks.

Estimation is a plain count-weighted sum of per-code contributions.
Refitting solves the linear least-squares problem over the training
design matrix with an orthogonal-factorization solver; rank-deficient
directions take the minimum-norm solution. All values are kJ/mol at
298.15 K.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Sequence

import numpy as np

from thermobase.elba import ElbaFeatureVector


class Phase(enum.Enum):
    GAS = "gas"
    LIQUID = "liquid"


class ThermoKind(enum.Enum):
    """Thermochemical quantity identifiers (all at 298.15 K, kJ/mol)."""

    FORMATION_CRYSTAL = "formation_crystal"
    FORMATION_LIQUID = "formation_liquid"
    FORMATION_GAS = "formation_gas"
    FUSION = "fusion"
    VAPORIZATION = "vaporization"
    SUBLIMATION = "sublimation"


REFERENCE_TEMPERATURE_K = 298.15


@dataclass(frozen=True)
class ThermoValue:
    kind: ThermoKind
    value: float
    uncertainty: float | None = None

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite thermochemical value for {self.kind.value}")
        if self.uncertainty is not None and self.uncertainty < 0:
            raise ValueError("uncertainty must be >= 0")

    def to_json(self) -> dict:
        d = {"kind": self.kind.value, "value": self.value}
        if self.uncertainty is not None:
            d["uncertainty"] = self.uncertainty
        return d

    @classmethod
    def from_json(cls, d: dict) -> "ThermoValue":
        return cls(
            kind=ThermoKind(d["kind"]),
            value=float(d["value"]),
            uncertainty=float(d["uncertainty"]) if d.get("uncertainty") is not None else None,
        )


class MissingParameterError(KeyError):
    """Feature vector uses codes the parameter table does not cover."""

    def __init__(self, missing: Iterable[str], phase: Phase):
        self.missing = tuple(sorted(missing))
        self.phase = phase
        super().__init__(
            f"{phase.value} table lacks parameters for: {', '.join(self.missing)}"
        )


@dataclass(frozen=True)
class ParameterTable:
    phase: Phase
    entries: dict[str, float]
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        for code, v in self.entries.items():
            if not math.isfinite(v):
                raise ValueError(f"non-finite parameter for code {code}")

    def to_json(self) -> dict:
        return {
            "phase": self.phase.value,
            "entries": dict(sorted(self.entries.items())),
            "provenance": self.provenance,
        }

    def dump(self, path) -> None:
        from pathlib import Path

        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def from_json(cls, d: dict) -> "ParameterTable":
        return cls(
            phase=Phase(d["phase"]),
            entries={k: float(v) for k, v in d["entries"].items()},
            provenance=d.get("provenance", {}),
        )

    @classmethod
    def load(cls, path) -> "ParameterTable":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


_FORMATION_KIND = {
    Phase.GAS: ThermoKind.FORMATION_GAS,
    Phase.LIQUID: ThermoKind.FORMATION_LIQUID,
}


def estimate(features: ElbaFeatureVector, table: ParameterTable) -> ThermoValue:
    """Count-weighted sum of parameter contributions.

    Raises MissingParameterError listing every uncovered code, signalling
    an out-of-coverage compound or a stale table.
    """
    missing = [c for c in features.codes() if c not in table.entries]
    if missing:
        raise MissingParameterError(missing, table.phase)
    total = sum(n * table.entries[c] for c, n in features.counts.items())
    return ThermoValue(kind=_FORMATION_KIND[table.phase], value=total)


@dataclass(frozen=True)
class FitReport:
    fitted: ParameterTable
    residuals: tuple[float, ...]  # signed, estimate minus observation
    mad: float
    unidentifiable_codes: tuple[str, ...]


def fit_parameters(
    training: Sequence[tuple[ElbaFeatureVector, ThermoValue]],
    phase: Phase,
    dataset_id: str = "",
    requested_codes: Iterable[str] = (),
) -> FitReport:
    """Least-squares refit of per-code contributions from observed values.

    ``requested_codes`` may list codes that should be reported as
    unidentifiable when no training compound exercises them.
    """
    if not training:
        raise ValueError("empty training set")
    for fv, obs in training:
        if not math.isfinite(obs.value):
            raise ValueError("non-finite observation in training set")
        if obs.kind is not _FORMATION_KIND[phase]:
            raise ValueError(
                f"observation kind {obs.kind.value} does not match phase {phase.value}"
            )

    supported = sorted({c for fv, _ in training for c in fv.codes()})
    unidentifiable = tuple(sorted(set(requested_codes) - set(supported)))

    x = np.zeros((len(training), len(supported)))
    y = np.zeros(len(training))
    col = {c: j for j, c in enumerate(supported)}
    for i, (fv, obs) in enumerate(training):
        for c, n in fv.counts.items():
            x[i, col[c]] = n
        y[i] = obs.value

    params, _, rank, _ = np.linalg.lstsq(x, y, rcond=None)
    residuals = x @ params - y
    mad = float(np.mean(np.abs(residuals)))

    table = ParameterTable(
        phase=phase,
        entries={c: float(params[col[c]]) for c in supported},
        provenance={
            "dataset_id": dataset_id,
            "fitted_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "n_compounds": len(training),
            "n_codes": len(supported),
            "rank": int(rank),
            "mad_kj_mol": mad,
            "max_abs_residual_kj_mol": float(np.max(np.abs(residuals))),
        },
    )
    return FitReport(
        fitted=table,
        residuals=tuple(float(r) for r in residuals),
        mad=mad,
        unidentifiable_codes=unidentifiable,
    )


@dataclass(frozen=True)
class ConsistencyFinding:
    """One phase-change identity evaluated on a record's values."""

    identity: str  # e.g. "sublimation = formation_gas - formation_crystal"
    residual: float  # |lhs - rhs| in kJ/mol
    combined_uncertainty: float  # root-sum-square of stated uncertainties
    consistent: bool
    missing_uncertainties: bool  # True when any uncertainty defaulted to 0


# Each identity: (lhs kind, [(coefficient, kind), ...]).
_IDENTITIES: tuple[tuple[ThermoKind, tuple[tuple[float, ThermoKind], ...]], ...] = (
    (ThermoKind.SUBLIMATION,
     ((1.0, ThermoKind.FORMATION_GAS), (-1.0, ThermoKind.FORMATION_CRYSTAL))),
    (ThermoKind.VAPORIZATION,
     ((1.0, ThermoKind.FORMATION_GAS), (-1.0, ThermoKind.FORMATION_LIQUID))),
    (ThermoKind.FUSION,
     ((1.0, ThermoKind.FORMATION_LIQUID), (-1.0, ThermoKind.FORMATION_CRYSTAL))),
    (ThermoKind.SUBLIMATION,
     ((1.0, ThermoKind.FUSION), (1.0, ThermoKind.VAPORIZATION))),
)


def consistency_check(values: Sequence[ThermoValue]) -> list[ConsistencyFinding]:
    """Evaluate every applicable phase-change identity.

    Returns findings, never raises: a record with too few related values
    simply yields an empty list.
    """
    by_kind: dict[ThermoKind, ThermoValue] = {}
    for tv in values:
        by_kind.setdefault(tv.kind, tv)

    findings: list[ConsistencyFinding] = []
    for lhs_kind, rhs_terms in _IDENTITIES:
        if lhs_kind not in by_kind:
            continue
        if any(k not in by_kind for _, k in rhs_terms):
            continue
        lhs = by_kind[lhs_kind]
        rhs = sum(coef * by_kind[k].value for coef, k in rhs_terms)
        residual = abs(lhs.value - rhs)
        involved = [lhs] + [by_kind[k] for _, k in rhs_terms]
        missing = any(tv.uncertainty is None for tv in involved)
        combined = math.sqrt(
            sum((tv.uncertainty or 0.0) ** 2 for tv in involved)
        )
        rhs_desc = " + ".join(
            f"{k.value}" if coef > 0 else f"-{k.value}" for coef, k in rhs_terms
        ).replace("+ -", "- ")
        findings.append(
            ConsistencyFinding(
                identity=f"{lhs_kind.value} = {rhs_desc}",
                residual=residual,
                combined_uncertainty=combined,
                consistent=residual <= combined,
                missing_uncertainties=missing,
            )
        )
    return findings


def implied_value(values: Sequence[ThermoValue], kind: ThermoKind) -> float | None:
    """Derive a missing quantity from the phase-change identities."""
    by_kind = {tv.kind: tv.value for tv in values}
    if kind in by_kind:
        return by_kind[kind]
    g = by_kind.get(ThermoKind.FORMATION_GAS)
    l = by_kind.get(ThermoKind.FORMATION_LIQUID)
    c = by_kind.get(ThermoKind.FORMATION_CRYSTAL)
    fus = by_kind.get(ThermoKind.FUSION)
    vap = by_kind.get(ThermoKind.VAPORIZATION)
    sub = by_kind.get(ThermoKind.SUBLIMATION)
    if kind is ThermoKind.SUBLIMATION:
        if g is not None and c is not None:
            return g - c
        if fus is not None and vap is not None:
            return fus + vap
    if kind is ThermoKind.VAPORIZATION and g is not None and l is not None:
        return g - l
    if kind is ThermoKind.FUSION and l is not None and c is not None:
        return l - c
    return None
