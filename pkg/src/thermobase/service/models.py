"""Pydantic request/response models for the HTTP API.

These are a thin serialization envelope; every value comes verbatim
from the core modules.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from thermobase.prediction import Prediction
from thermobase.records import CompoundRecord
from thermobase.search import SearchHit
from thermobase.store import PendingSubmission, StoreStats
from thermobase.thermo import ConsistencyFinding, ThermoValue


class ThermoValueOut(BaseModel):
    kind: str
    value: float
    uncertainty: float | None = None

    @classmethod
    def of(cls, tv: ThermoValue) -> "ThermoValueOut":
        return cls(kind=tv.kind.value, value=tv.value, uncertainty=tv.uncertainty)


class ConsistencyFindingOut(BaseModel):
    identity: str
    residual: float
    combined_uncertainty: float
    consistent: bool
    missing_uncertainties: bool

    @classmethod
    def of(cls, f: ConsistencyFinding) -> "ConsistencyFindingOut":
        return cls(
            identity=f.identity,
            residual=f.residual,
            combined_uncertainty=f.combined_uncertainty,
            consistent=f.consistent,
            missing_uncertainties=f.missing_uncertainties,
        )


class CompoundOut(BaseModel):
    molecular_id: str
    name: str
    synonyms: list[str]
    casrn: str | None
    formula: str
    weight: float
    physical_state: str
    smiles: str
    usmiles: str
    compound_class: str = Field(serialization_alias="class")
    subclass: str
    family: str
    characteristics: list[str]
    thermo: list[ThermoValueOut]
    observations: str
    references: list[str]
    consistency: list[ConsistencyFindingOut] = []

    model_config = {"populate_by_name": True}

    @classmethod
    def of(cls, rec: CompoundRecord, consistency: list[ConsistencyFinding] | None = None) -> "CompoundOut":
        return cls(
            molecular_id=rec.molecular_id,
            name=rec.name,
            synonyms=list(rec.synonyms),
            casrn=rec.casrn,
            formula=rec.formula,
            weight=rec.weight,
            physical_state=rec.physical_state,
            smiles=rec.smiles,
            usmiles=rec.usmiles,
            compound_class=rec.compound_class,
            subclass=rec.subclass,
            family=rec.family,
            characteristics=list(rec.characteristics),
            thermo=[ThermoValueOut.of(tv) for tv in rec.thermo],
            observations=rec.observations,
            references=list(rec.references),
            consistency=[ConsistencyFindingOut.of(f) for f in consistency or []],
        )


class HitOut(BaseModel):
    molecular_id: str
    name: str
    formula: str
    casrn: str | None
    smiles: str
    weight: float
    match_index: int | None = None
    matched_name: str | None = None
    similarity: float | None = None
    mw_delta: float | None = None
    phonetic: bool = False

    @classmethod
    def of(cls, hit: SearchHit) -> "HitOut":
        r = hit.record
        return cls(
            molecular_id=r.molecular_id,
            name=r.name,
            formula=r.formula,
            casrn=r.casrn,
            smiles=r.smiles,
            weight=r.weight,
            match_index=hit.match_index,
            matched_name=hit.matched_name,
            similarity=hit.similarity,
            mw_delta=hit.mw_delta,
            phonetic=hit.phonetic,
        )


class SearchResponse(BaseModel):
    mode: str
    query: str
    count: int
    warning: str | None = None
    hits: list[HitOut]


class AdvancedSearchRequest(BaseModel):
    name: str | None = None
    formula: str | None = None
    physical_state: str | None = None
    weight: float | None = None  # exact match within +-0.01
    weight_min: float | None = None
    weight_max: float | None = None
    compound_class: str | None = Field(default=None, alias="class")
    subclass: str | None = None
    family: str | None = None
    characteristics: list[str] = []

    model_config = {"populate_by_name": True}


class StructureSearchRequest(BaseModel):
    smiles: str
    threshold_percent: int = 100


class SubstructureSearchRequest(BaseModel):
    smiles: str


class PredictRequest(BaseModel):
    smiles: str | None = None
    name: str | None = None
    trans_ring_double_bonds: int = 0


class FeatureRowOut(BaseModel):
    code: str
    frequency: int
    description: str


class PhaseEstimateOut(BaseModel):
    phase: str
    value: float | None = None
    missing_codes: list[str] = []


class PredictionResponse(BaseModel):
    input: str
    smiles: str
    canonical_smiles: str
    formula: str
    weight: float
    name: str | None
    features: dict[str, int]
    feature_rows: list[FeatureRowOut]
    estimates: list[PhaseEstimateOut]
    experimental: list[ThermoValueOut] | None
    isomers: list[HitOut]

    @classmethod
    def of(cls, p: Prediction) -> "PredictionResponse":
        return cls(
            input=p.input_text,
            smiles=p.smiles,
            canonical_smiles=p.canonical_smiles,
            formula=p.formula,
            weight=p.weight,
            name=p.name,
            features=p.features.as_dict(),
            feature_rows=[
                FeatureRowOut(code=r.code, frequency=r.frequency, description=r.description)
                for r in p.feature_rows
            ],
            estimates=[
                PhaseEstimateOut(
                    phase=e.phase.value,
                    value=e.value,
                    missing_codes=list(e.missing_codes),
                )
                for e in p.estimates
            ],
            experimental=(
                [ThermoValueOut.of(tv) for tv in p.experimental]
                if p.experimental is not None
                else None
            ),
            isomers=[HitOut.of(SearchHit(record=r)) for r in p.isomers],
        )


class SubmissionRequest(BaseModel):
    submitter: str
    name: str
    smiles: str
    synonyms: list[str] = []
    casrn: str | None = None
    physical_state: str | None = None
    compound_class: str | None = Field(default=None, alias="class")
    subclass: str | None = None
    family: str | None = None
    characteristics: list[str] = []
    thermo: list[ThermoValueOut] = []
    observations: str = ""
    references: list[str] = []

    model_config = {"populate_by_name": True}


class SubmissionOut(BaseModel):
    submission_id: str
    status: str
    submitter: str
    warnings: list[str]
    reviewer_note: str
    submitted_at: str
    decided_at: str
    assigned_id: str
    payload: dict

    @classmethod
    def of(cls, sub: PendingSubmission) -> "SubmissionOut":
        return cls(
            submission_id=sub.submission_id,
            status=sub.status,
            submitter=sub.submitter,
            warnings=list(sub.warnings),
            reviewer_note=sub.reviewer_note,
            submitted_at=sub.submitted_at,
            decided_at=sub.decided_at,
            assigned_id=sub.assigned_id,
            payload=sub.payload,
        )


class ReviewRequest(BaseModel):
    note: str = ""


class StatsOut(BaseModel):
    compounds: int
    names: int
    synonyms: int
    casrn: int
    classes: int
    subclasses: int
    families: int
    formation: dict[str, int]
    phase_change: dict[str, int]

    @classmethod
    def of(cls, s: StoreStats) -> "StatsOut":
        return cls(**s.to_json())


class ApiError(BaseModel):
    code: str
    message: str
    field: str | None = None
    reasons: list[str] = []
