"""Compound record schema, CASRN validation, and row parsing.

Records serialize to JSON objects (one per line in the store file). A
CSV import with a header row maps onto the same fields; see
``docs/file-formats.md`` for the field table.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, replace

from thermobase.thermo import ThermoKind, ThermoValue

PHYSICAL_STATES = ("gas", "liquid", "crystal")

MOLECULAR_ID_RE = re.compile(r"^C\d{6}$")

# Registry numbers are assigned sequentially, so the leading segment
# never starts with zero; the middle segment may (e.g. 50-00-0).
_CASRN_RE = re.compile(r"^([1-9]\d{1,6})-(\d{2})-(\d)$")


def validate_casrn(casrn: str) -> bool:
    """Check digit rule: body digits weighted 1,2,3,... from the right,
    summed, modulo 10 must equal the final digit. Malformed input is
    simply invalid, never an error."""
    if not isinstance(casrn, str):
        return False
    m = _CASRN_RE.match(casrn.strip())
    if not m:
        return False
    body = m.group(1) + m.group(2)
    check = int(m.group(3))
    total = sum(int(d) * w for w, d in enumerate(reversed(body), start=1))
    return total % 10 == check


@dataclass(frozen=True)
class CompoundRecord:
    molecular_id: str
    name: str
    smiles: str
    usmiles: str = ""
    synonyms: tuple[str, ...] = ()
    casrn: str | None = None
    formula: str = ""
    weight: float = 0.0
    physical_state: str = "liquid"
    compound_class: str = ""
    subclass: str = ""
    family: str = ""
    characteristics: tuple[str, ...] = ()
    thermo: tuple[ThermoValue, ...] = ()
    observations: str = ""
    references: tuple[str, ...] = ()

    def all_names(self) -> tuple[str, ...]:
        return (self.name, *self.synonyms)

    def thermo_value(self, kind: ThermoKind) -> ThermoValue | None:
        for tv in self.thermo:
            if tv.kind is kind:
                return tv
        return None

    def with_id(self, molecular_id: str) -> "CompoundRecord":
        return replace(self, molecular_id=molecular_id)

    def to_json(self) -> dict:
        return {
            "molecular_id": self.molecular_id,
            "name": self.name,
            "synonyms": list(self.synonyms),
            "casrn": self.casrn,
            "formula": self.formula,
            "weight": self.weight,
            "physical_state": self.physical_state,
            "smiles": self.smiles,
            "usmiles": self.usmiles,
            "class": self.compound_class,
            "subclass": self.subclass,
            "family": self.family,
            "characteristics": list(self.characteristics),
            "thermo": [tv.to_json() for tv in self.thermo],
            "observations": self.observations,
            "references": list(self.references),
        }

    @classmethod
    def from_json(cls, d: dict) -> "CompoundRecord":
        return cls(
            molecular_id=d.get("molecular_id", ""),
            name=d.get("name", ""),
            synonyms=tuple(d.get("synonyms") or ()),
            casrn=d.get("casrn") or None,
            formula=d.get("formula", ""),
            weight=float(d.get("weight") or 0.0),
            physical_state=d.get("physical_state", "liquid"),
            smiles=d.get("smiles", ""),
            usmiles=d.get("usmiles", ""),
            compound_class=d.get("class", ""),
            subclass=d.get("subclass", ""),
            family=d.get("family", ""),
            characteristics=tuple(d.get("characteristics") or ()),
            thermo=tuple(ThermoValue.from_json(t) for t in d.get("thermo") or ()),
            observations=d.get("observations", ""),
            references=tuple(d.get("references") or ()),
        )


# CSV columns carrying thermochemical values, as value/uncertainty pairs.
_CSV_THERMO_COLUMNS = {
    "formation_crystal": ThermoKind.FORMATION_CRYSTAL,
    "formation_liquid": ThermoKind.FORMATION_LIQUID,
    "formation_gas": ThermoKind.FORMATION_GAS,
    "fusion": ThermoKind.FUSION,
    "vaporization": ThermoKind.VAPORIZATION,
    "sublimation": ThermoKind.SUBLIMATION,
}

_LIST_SEPARATOR = ";"


def record_from_csv_row(row: dict[str, str]) -> dict:
    """Map one CSV row (header-keyed) onto the JSON record shape."""
    d: dict = {}
    for key in ("molecular_id", "name", "casrn", "formula", "physical_state",
                "smiles", "usmiles", "class", "subclass", "family", "observations"):
        v = (row.get(key) or "").strip()
        if v:
            d[key] = v
    if row.get("weight", "").strip():
        d["weight"] = float(row["weight"])
    for key in ("synonyms", "characteristics", "references"):
        v = (row.get(key) or "").strip()
        if v:
            d[key] = [p.strip() for p in v.split(_LIST_SEPARATOR) if p.strip()]
    thermo = []
    for col, kind in _CSV_THERMO_COLUMNS.items():
        v = (row.get(col) or "").strip()
        if not v:
            continue
        unc = (row.get(f"{col}_unc") or "").strip()
        entry = {"kind": kind.value, "value": float(v)}
        if unc:
            entry["uncertainty"] = float(unc)
        thermo.append(entry)
    if thermo:
        d["thermo"] = thermo
    return d


def read_dataset(text: str, fmt: str) -> list[dict]:
    """Parse a dataset file body into raw record dicts.

    ``fmt`` is "jsonl" or "csv"; rows keep their 1-based source line for
    ingest reports.
    """
    import json

    rows: list[dict] = []
    if fmt == "jsonl":
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {lineno}: invalid JSON ({exc})") from None
            if not isinstance(obj, dict):
                raise ValueError(f"line {lineno}: expected a JSON object")
            obj["_line"] = lineno
            rows.append(obj)
    elif fmt == "csv":
        reader = csv.DictReader(io.StringIO(text))
        for lineno, raw in enumerate(reader, start=2):
            d = record_from_csv_row(raw)
            d["_line"] = lineno
            rows.append(d)
    else:
        raise ValueError(f"unknown dataset format {fmt!r} (use jsonl or csv)")
    return rows


def guess_format(path: str) -> str:
    return "csv" if str(path).lower().endswith(".csv") else "jsonl"
