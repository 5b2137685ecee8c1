"""Compound store: validated ingest, submissions, stats, history.

Persistence is a single JSON-lines file per area (compounds, history,
submissions) under a data directory; everything also runs fully
in-memory when no directory is given. Readers always work against an
immutable snapshot that is swapped atomically under the write lock, so
many readers never block on the single writer.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from functools import cached_property
from pathlib import Path

from thermobase.chem import (
    ChemError,
    canonical_form,
    molecular_formula,
    molecular_weight,
    parse_smiles,
)
from thermobase.records import (
    MOLECULAR_ID_RE,
    PHYSICAL_STATES,
    CompoundRecord,
    validate_casrn,
)
from thermobase.thermo import consistency_check

WEIGHT_TOLERANCE = 0.01  # g/mol agreement between declared and computed


class StoreError(ValueError):
    pass


class DuplicateIdError(StoreError):
    """Same molecular_id claimed by two different structures."""


class UnknownSubmissionError(KeyError):
    pass


class AlreadyDecidedError(StoreError):
    pass


@dataclass(frozen=True)
class Snapshot:
    """Immutable view of the store used by all read paths."""

    records: tuple[CompoundRecord, ...]
    version: int = 0

    @cached_property
    def by_id(self) -> dict[str, CompoundRecord]:
        return {r.molecular_id: r for r in self.records}

    @cached_property
    def by_usmiles(self) -> dict[str, CompoundRecord]:
        return {r.usmiles: r for r in self.records}


@dataclass
class PendingSubmission:
    submission_id: str
    payload: dict  # candidate record, JSON shape without molecular_id
    submitter: str
    status: str = "pending"  # pending | approved | rejected
    reviewer_note: str = ""
    warnings: tuple[str, ...] = ()
    submitted_at: str = ""
    decided_at: str = ""
    assigned_id: str = ""  # molecular_id granted on approval

    def to_json(self) -> dict:
        return {
            "submission_id": self.submission_id,
            "payload": self.payload,
            "submitter": self.submitter,
            "status": self.status,
            "reviewer_note": self.reviewer_note,
            "warnings": list(self.warnings),
            "submitted_at": self.submitted_at,
            "decided_at": self.decided_at,
            "assigned_id": self.assigned_id,
        }

    @classmethod
    def from_json(cls, d: dict) -> "PendingSubmission":
        return cls(
            submission_id=d["submission_id"],
            payload=d["payload"],
            submitter=d.get("submitter", ""),
            status=d.get("status", "pending"),
            reviewer_note=d.get("reviewer_note", ""),
            warnings=tuple(d.get("warnings") or ()),
            submitted_at=d.get("submitted_at", ""),
            decided_at=d.get("decided_at", ""),
            assigned_id=d.get("assigned_id", ""),
        )


@dataclass(frozen=True)
class RejectedRow:
    line: int
    label: str  # name or id, best effort
    reason: str


@dataclass(frozen=True)
class IngestReport:
    accepted_ids: tuple[str, ...]
    rejected: tuple[RejectedRow, ...]

    @property
    def accepted(self) -> int:
        return len(self.accepted_ids)


@dataclass(frozen=True)
class StoreStats:
    compounds: int
    names: int
    synonyms: int
    casrn: int
    classes: int
    subclasses: int
    families: int
    formation: dict[str, int]  # crystal / liquid / gas
    phase_change: dict[str, int]  # fusion / vaporization / sublimation

    def to_json(self) -> dict:
        return {
            "compounds": self.compounds,
            "names": self.names,
            "synonyms": self.synonyms,
            "casrn": self.casrn,
            "classes": self.classes,
            "subclasses": self.subclasses,
            "families": self.families,
            "formation": dict(self.formation),
            "phase_change": dict(self.phase_change),
        }


class RowError(Exception):
    """Validation failure for one dataset row."""


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class Store:
    """Single-writer compound store with atomic snapshot publication."""

    def __init__(self, data_dir: str | os.PathLike | None = None):
        self._lock = threading.RLock()
        self._dir = Path(data_dir) if data_dir is not None else None
        self._snapshot = Snapshot(records=())
        self._submissions: dict[str, PendingSubmission] = {}
        self._history: list[dict] = []
        self._listeners: list = []
        if self._dir is not None:
            self._dir.mkdir(parents=True, exist_ok=True)
            self._load()

    # -- read side ---------------------------------------------------------

    def snapshot(self) -> Snapshot:
        return self._snapshot

    @property
    def records(self) -> tuple[CompoundRecord, ...]:
        return self._snapshot.records

    def get(self, molecular_id: str) -> CompoundRecord | None:
        return self._snapshot.by_id.get(molecular_id)

    def stats(self) -> StoreStats:
        snap = self._snapshot
        formation = {"crystal": 0, "liquid": 0, "gas": 0}
        change = {"fusion": 0, "vaporization": 0, "sublimation": 0}
        for r in snap.records:
            for tv in r.thermo:
                kind = tv.kind.value
                if kind.startswith("formation_"):
                    formation[kind.removeprefix("formation_")] += 1
                else:
                    change[kind] += 1
        return StoreStats(
            compounds=len({r.molecular_id for r in snap.records}),
            names=len(snap.records),
            synonyms=sum(len(r.synonyms) for r in snap.records),
            casrn=sum(1 for r in snap.records if r.casrn),
            classes=len({r.compound_class for r in snap.records if r.compound_class}),
            subclasses=len({r.subclass for r in snap.records if r.subclass}),
            families=len({r.family for r in snap.records if r.family}),
            formation=formation,
            phase_change=change,
        )

    def audit(self) -> list[dict]:
        """Re-check every stored record's invariants."""
        findings = []
        seen_ids: set[str] = set()
        for r in self._snapshot.records:
            problems = []
            if not MOLECULAR_ID_RE.match(r.molecular_id):
                problems.append("malformed molecular_id")
            if r.molecular_id in seen_ids:
                problems.append("duplicate molecular_id")
            seen_ids.add(r.molecular_id)
            try:
                _validate_structure(r)
            except RowError as exc:
                problems.append(str(exc))
            for p in problems:
                findings.append({"molecular_id": r.molecular_id, "problem": p})
        return findings

    def history(self) -> list[dict]:
        return list(self._history)

    # -- write side --------------------------------------------------------

    def subscribe(self, callback) -> None:
        """Register a callable invoked with the new snapshot after writes."""
        self._listeners.append(callback)

    def _publish(self, records: tuple[CompoundRecord, ...]) -> None:
        self._snapshot = Snapshot(records=records, version=self._snapshot.version + 1)
        for cb in self._listeners:
            cb(self._snapshot)

    def ingest(self, rows: list[dict], dataset_id: str = "") -> IngestReport:
        """Validate and insert dataset rows; transactional per call.

        Rejected rows never enter the store. A molecular_id collision
        with a *different* structure aborts the whole call.
        """
        with self._lock:
            accepted: list[CompoundRecord] = []
            rejected: list[RejectedRow] = []
            snap = self._snapshot
            used_ids = {r.molecular_id for r in snap.records}
            used_usmiles = dict(snap.by_usmiles)
            next_id = self._next_numeric_id()

            for row in rows:
                line = int(row.get("_line", 0))
                label = row.get("molecular_id") or row.get("name") or f"row {line}"
                try:
                    record = _row_to_record(row)
                except RowError as exc:
                    rejected.append(RejectedRow(line=line, label=str(label), reason=str(exc)))
                    continue

                if record.usmiles in used_usmiles:
                    other = used_usmiles[record.usmiles]
                    rejected.append(
                        RejectedRow(
                            line=line,
                            label=str(label),
                            reason=f"duplicate structure of {other.molecular_id} "
                            f"({other.name}); store keeps a non-redundant set",
                        )
                    )
                    continue

                if record.molecular_id:
                    if record.molecular_id in used_ids:
                        raise DuplicateIdError(
                            f"molecular_id {record.molecular_id} already names a "
                            "different structure"
                        )
                else:
                    record = record.with_id(f"C{next_id:06d}")
                    next_id += 1

                used_ids.add(record.molecular_id)
                used_usmiles[record.usmiles] = record
                accepted.append(record)

            if accepted:
                self._publish(snap.records + tuple(accepted))
                self._persist_records()
            return IngestReport(
                accepted_ids=tuple(r.molecular_id for r in accepted),
                rejected=tuple(rejected),
            )

    def submit(self, payload: dict, submitter: str) -> PendingSubmission:
        """Queue a user-contributed candidate for admin review.

        Pre-checks reject unparseable structures outright; a duplicate
        structure only warns the reviewer.
        """
        problems = []
        if not (payload.get("name") or "").strip():
            problems.append("name: required")
        try:
            mol = parse_smiles(payload.get("smiles") or "")
        except ChemError as exc:
            problems.append(f"smiles: {exc}")
            mol = None
        casrn = payload.get("casrn")
        if casrn and not validate_casrn(casrn):
            problems.append("casrn: fails the check-digit rule")
        state = payload.get("physical_state")
        if state and state not in PHYSICAL_STATES:
            problems.append(f"physical_state: must be one of {PHYSICAL_STATES}")
        if problems:
            raise RowError("; ".join(problems))

        warnings = []
        if mol is not None:
            usmiles = canonical_form(mol)
            existing = self._snapshot.by_usmiles.get(usmiles)
            if existing:
                warnings.append(
                    f"duplicate structure of {existing.molecular_id} ({existing.name})"
                )

        with self._lock:
            sub = PendingSubmission(
                submission_id=f"S{len(self._submissions) + 1:06d}",
                payload={k: v for k, v in payload.items() if not k.startswith("_")},
                submitter=submitter,
                warnings=tuple(warnings),
                submitted_at=_now(),
            )
            self._submissions[sub.submission_id] = sub
            self._persist_submissions()
            return sub

    def pending_submissions(self) -> list[PendingSubmission]:
        return [s for s in self._submissions.values() if s.status == "pending"]

    def get_submission(self, submission_id: str) -> PendingSubmission:
        try:
            return self._submissions[submission_id]
        except KeyError:
            raise UnknownSubmissionError(submission_id) from None

    def review(
        self, submission_id: str, decision: str, note: str = ""
    ) -> PendingSubmission:
        """Approve (insert with a fresh molecular_id) or reject."""
        if decision not in ("approve", "reject"):
            raise StoreError(f"decision must be approve or reject, got {decision!r}")
        with self._lock:
            sub = self.get_submission(submission_id)
            if sub.status != "pending":
                raise AlreadyDecidedError(
                    f"submission {submission_id} already {sub.status}"
                )
            if decision == "reject":
                sub.status = "rejected"
                sub.reviewer_note = note
                sub.decided_at = _now()
                self._persist_submissions()
                return sub

            record = _row_to_record(sub.payload)
            snap = self._snapshot
            if record.usmiles in snap.by_usmiles:
                other = snap.by_usmiles[record.usmiles]
                raise StoreError(
                    f"cannot approve: duplicate structure of {other.molecular_id}"
                )
            record = record.with_id(f"C{self._next_numeric_id():06d}")
            self._publish(snap.records + (record,))
            sub.status = "approved"
            sub.reviewer_note = note
            sub.decided_at = _now()
            sub.assigned_id = record.molecular_id
            self._persist_records()
            self._persist_submissions()
            return sub

    def update(self, record: CompoundRecord) -> None:
        """Replace a record; the outdated version moves to history."""
        with self._lock:
            snap = self._snapshot
            old = snap.by_id.get(record.molecular_id)
            if old is None:
                raise StoreError(f"unknown molecular_id {record.molecular_id}")
            _validate_structure(record)
            self._history.append(
                {"retired_at": _now(), "reason": "updated", "record": old.to_json()}
            )
            records = tuple(
                record if r.molecular_id == record.molecular_id else r
                for r in snap.records
            )
            self._publish(records)
            self._persist_records()
            self._persist_history()

    def delete(self, molecular_id: str) -> None:
        with self._lock:
            snap = self._snapshot
            old = snap.by_id.get(molecular_id)
            if old is None:
                raise StoreError(f"unknown molecular_id {molecular_id}")
            self._history.append(
                {"retired_at": _now(), "reason": "deleted", "record": old.to_json()}
            )
            self._publish(tuple(r for r in snap.records if r.molecular_id != molecular_id))
            self._persist_records()
            self._persist_history()

    # -- internals ---------------------------------------------------------

    def _next_numeric_id(self) -> int:
        highest = 0
        for r in self._snapshot.records:
            if MOLECULAR_ID_RE.match(r.molecular_id):
                highest = max(highest, int(r.molecular_id[1:]))
        for h in self._history:
            rid = h.get("record", {}).get("molecular_id", "")
            if MOLECULAR_ID_RE.match(rid):
                highest = max(highest, int(rid[1:]))
        return highest + 1

    def _load(self) -> None:
        records = []
        path = self._dir / "compounds.jsonl"
        if path.exists():
            for line in path.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    records.append(CompoundRecord.from_json(json.loads(line)))
        self._snapshot = Snapshot(records=tuple(records), version=1)
        subs = self._dir / "submissions.jsonl"
        if subs.exists():
            for line in subs.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    s = PendingSubmission.from_json(json.loads(line))
                    self._submissions[s.submission_id] = s
        hist = self._dir / "history.jsonl"
        if hist.exists():
            for line in hist.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    self._history.append(json.loads(line))

    def _write_jsonl(self, name: str, objs: list[dict]) -> None:
        if self._dir is None:
            return
        path = self._dir / name
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            for obj in objs:
                fh.write(json.dumps(obj, ensure_ascii=False) + "\n")
        os.replace(tmp, path)

    def _persist_records(self) -> None:
        self._write_jsonl("compounds.jsonl", [r.to_json() for r in self._snapshot.records])

    def _persist_submissions(self) -> None:
        self._write_jsonl(
            "submissions.jsonl", [s.to_json() for s in self._submissions.values()]
        )

    def _persist_history(self) -> None:
        self._write_jsonl("history.jsonl", self._history)


def _row_to_record(row: dict) -> CompoundRecord:
    """Validate one raw row into a CompoundRecord (without dedup/id checks)."""
    name = (row.get("name") or "").strip()
    if not name:
        raise RowError("name: required")

    smiles = (row.get("smiles") or "").strip()
    try:
        mol = parse_smiles(smiles)
    except ChemError as exc:
        raise RowError(f"smiles: {exc}") from None

    usmiles = canonical_form(mol)
    computed_formula = str(molecular_formula(mol))
    declared_formula = (row.get("formula") or "").strip()
    if declared_formula and declared_formula != computed_formula:
        raise RowError(
            f"formula mismatch: declared {declared_formula}, "
            f"structure gives {computed_formula}"
        )

    computed_weight = molecular_weight(mol)
    declared_weight = row.get("weight")
    if declared_weight is not None:
        if abs(float(declared_weight) - computed_weight) > WEIGHT_TOLERANCE:
            raise RowError(
                f"weight mismatch: declared {declared_weight}, "
                f"structure gives {computed_weight:.5f}"
            )

    casrn = (row.get("casrn") or "").strip() or None
    if casrn and not validate_casrn(casrn):
        raise RowError(f"casrn {casrn}: fails the check-digit rule")

    state = (row.get("physical_state") or "liquid").strip()
    if state not in PHYSICAL_STATES:
        raise RowError(f"physical_state: must be one of {PHYSICAL_STATES}")

    molecular_id = (row.get("molecular_id") or "").strip()
    if molecular_id and not MOLECULAR_ID_RE.match(molecular_id):
        raise RowError(f"molecular_id {molecular_id}: must be 'C' + 6 digits")

    record = CompoundRecord.from_json({**row, "molecular_id": molecular_id})
    record = replace(
        record,
        name=name,
        usmiles=usmiles,
        formula=computed_formula,
        weight=round(computed_weight, 5),
        casrn=casrn,
        physical_state=state,
    )

    bad = [f for f in consistency_check(record.thermo) if not f.consistent]
    if bad:
        worst = max(bad, key=lambda f: f.residual)
        raise RowError(
            f"thermodynamically inconsistent: {worst.identity} off by "
            f"{worst.residual:.1f} kJ/mol (combined uncertainty "
            f"{worst.combined_uncertainty:.1f})"
        )
    return record


def _validate_structure(record: CompoundRecord) -> None:
    """Invariant re-check used by audit and update."""
    try:
        mol = parse_smiles(record.smiles)
    except ChemError as exc:
        raise RowError(f"smiles no longer parses: {exc}") from None
    if canonical_form(mol) != record.usmiles:
        raise RowError("usmiles does not match the canonicalized structure")
    if record.formula != str(molecular_formula(mol)):
        raise RowError("formula does not match the structure")
    if abs(record.weight - molecular_weight(mol)) > WEIGHT_TOLERANCE:
        raise RowError("weight does not match the structure")
    if record.casrn and not validate_casrn(record.casrn):
        raise RowError("casrn fails the check-digit rule")
    bad = [f for f in consistency_check(record.thermo) if not f.consistent]
    if bad:
        raise RowError("thermochemical values violate a phase-change identity")
