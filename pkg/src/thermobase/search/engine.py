"""Search engine over a store snapshot.

Indices (parsed graphs, fingerprints, formula multisets, lowercase
names) are immutable per-snapshot structures rebuilt lazily when the
store version changes; fingerprints are carried over between rebuilds.
Every ranking breaks final ties by molecular_id, so results are
reproducible run to run.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from thermobase.chem import ChemError, canonical_form, molecular_weight, parse_smiles
from thermobase.chem.graph import MolecularGraph, molecular_formula
from thermobase.records import MOLECULAR_ID_RE, CompoundRecord, validate_casrn
from thermobase.search.fingerprint import fingerprint, is_superset, tanimoto
from thermobase.search.soundex import soundex
from thermobase.search.substructure import find_embedding
from thermobase.store import Store

MAX_HITS = 100

# Similarity thresholds exposed by the UI, as fractions.
ALLOWED_THRESHOLDS = (0.70, 0.75, 0.80, 0.85, 0.90, 0.95, 1.00)

_CASRN_SHAPE = re.compile(r"^\d{1,7}-\d{2}-\d$")
_FORMULA_TOKEN = re.compile(r"([A-Z][a-z]?)(\d+|\?)?")


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchHit:
    record: CompoundRecord
    match_index: int | None = None  # name search: position of first occurrence
    matched_name: str | None = None
    similarity: float | None = None
    mw_delta: float | None = None
    phonetic: bool = False

    @property
    def molecular_id(self) -> str:
        return self.record.molecular_id


@dataclass(frozen=True)
class _Entry:
    record: CompoundRecord
    graph: MolecularGraph
    bits: int
    formula_counts: dict[str, int]
    weight: float
    lower_names: tuple[str, ...]


@dataclass(frozen=True)
class AdvancedFilters:
    name: str | None = None
    formula: str | None = None
    physical_state: str | None = None
    weight_min: float | None = None
    weight_max: float | None = None
    compound_class: str | None = None
    subclass: str | None = None
    family: str | None = None
    characteristics: tuple[str, ...] = ()

    def empty(self) -> bool:
        return not any(
            (
                self.name,
                self.formula,
                self.physical_state,
                self.weight_min is not None,
                self.weight_max is not None,
                self.compound_class,
                self.subclass,
                self.family,
                self.characteristics,
            )
        )


def parse_formula_pattern(pattern: str) -> dict[str, int | None]:
    """Element -> count pattern; None means '?' (any count >= 1),
    a bare symbol means exactly one atom."""
    pattern = (pattern or "").strip()
    if not pattern:
        raise SearchError("empty formula pattern")
    result: dict[str, int | None] = {}
    pos = 0
    while pos < len(pattern):
        m = _FORMULA_TOKEN.match(pattern, pos)
        if not m or not m.group(1):
            raise SearchError(f"unparseable formula pattern at {pattern[pos:]!r}")
        el, count = m.group(1), m.group(2)
        if el in result:
            raise SearchError(f"element {el} listed twice in formula pattern")
        result[el] = None if count == "?" else int(count) if count else 1
        pos = m.end()
    return result


def _matches_formula(counts: dict[str, int], pattern: dict[str, int | None]) -> bool:
    if set(counts) != set(pattern):
        return False
    for el, want in pattern.items():
        have = counts.get(el, 0)
        if want is None:
            if have < 1:
                return False
        elif have != want:
            return False
    return True


class SearchEngine:
    def __init__(self, store: Store):
        self._store = store
        self._entries: tuple[_Entry, ...] = ()
        self._version = -1

    # -- index -------------------------------------------------------------

    def _index(self) -> tuple[_Entry, ...]:
        snap = self._store.snapshot()
        if snap.version != self._version:
            old_bits = {e.record.usmiles: e.bits for e in self._entries}
            entries = []
            for rec in snap.records:
                try:
                    graph = parse_smiles(rec.usmiles)
                except ChemError:
                    continue  # audit() reports broken records
                bits = old_bits.get(rec.usmiles)
                if bits is None:
                    bits = fingerprint(graph)
                entries.append(
                    _Entry(
                        record=rec,
                        graph=graph,
                        bits=bits,
                        formula_counts=dict(molecular_formula(graph).element_counts),
                        weight=rec.weight,
                        lower_names=tuple(n.lower() for n in rec.all_names()),
                    )
                )
            self._entries = tuple(
                sorted(entries, key=lambda e: e.record.molecular_id)
            )
            self._version = snap.version
        return self._entries

    # -- name --------------------------------------------------------------

    def search_name(self, q: str, limit: int = MAX_HITS) -> list[SearchHit]:
        """Case-insensitive substring over names and synonyms, ordered by
        (first-occurrence index, matched-name length, id); falls back to
        phonetic matching only when there is no substring hit."""
        q = (q or "").strip().lower()
        if not q:
            raise SearchError("empty name query")
        hits = []
        for e in self._index():
            best: tuple[int, int, str] | None = None
            for name, lower in zip(e.record.all_names(), e.lower_names):
                idx = lower.find(q)
                if idx >= 0:
                    key = (idx, len(name), name)
                    if best is None or key < best:
                        best = key
            if best is not None:
                hits.append(
                    SearchHit(record=e.record, match_index=best[0], matched_name=best[2])
                )
        if hits:
            hits.sort(
                key=lambda h: (h.match_index, len(h.matched_name), h.molecular_id)
            )
            return hits[:limit]

        code = soundex(q)
        if not code:
            return []
        phonetic = []
        for e in self._index():
            for name in e.record.all_names():
                if soundex(name) == code:
                    phonetic.append(
                        SearchHit(record=e.record, matched_name=name, phonetic=True)
                    )
                    break
        phonetic.sort(key=lambda h: (len(h.matched_name), h.molecular_id))
        return phonetic[:limit]

    # -- formula -----------------------------------------------------------

    def search_formula(self, pattern: str, limit: int = MAX_HITS) -> list[SearchHit]:
        parsed = parse_formula_pattern(pattern)
        hits = [
            SearchHit(record=e.record)
            for e in self._index()
            if _matches_formula(e.formula_counts, parsed)
        ]
        hits.sort(key=lambda h: h.molecular_id)
        return hits[:limit]

    # -- exact lookups -------------------------------------------------------

    def lookup(self, q: str) -> tuple[list[SearchHit], str | None]:
        """Exact molecular_id or CASRN match; at most one hit.

        A CASRN-shaped query failing the check digit returns a warning
        and no hits."""
        q = (q or "").strip()
        if MOLECULAR_ID_RE.match(q):
            rec = self._store.snapshot().by_id.get(q)
            return ([SearchHit(record=rec)] if rec else [], None)
        if _CASRN_SHAPE.match(q):
            if not validate_casrn(q):
                return [], f"CASRN {q} fails the check-digit rule"
            hits = [
                SearchHit(record=e.record)
                for e in self._index()
                if e.record.casrn == q
            ]
            return hits[:1], None
        return [], None

    # -- structure ---------------------------------------------------------

    def search_similarity(
        self, query_smiles: str, threshold: float, limit: int = MAX_HITS
    ) -> list[SearchHit]:
        if not any(abs(threshold - t) < 1e-9 for t in ALLOWED_THRESHOLDS):
            raise SearchError(
                f"threshold must be one of {[int(t * 100) for t in ALLOWED_THRESHOLDS]} percent"
            )
        mol = parse_smiles(query_smiles)
        query_mw = molecular_weight(mol)

        if threshold >= 1.0 - 1e-9:
            usmiles = canonical_form(mol)
            hits = [
                SearchHit(
                    record=e.record,
                    similarity=1.0,
                    mw_delta=abs(query_mw - e.weight),
                )
                for e in self._index()
                if e.record.usmiles == usmiles
            ]
        else:
            bits = fingerprint(mol)
            hits = []
            for e in self._index():
                sim = tanimoto(bits, e.bits)
                if sim >= threshold:
                    hits.append(
                        SearchHit(
                            record=e.record,
                            similarity=sim,
                            mw_delta=abs(query_mw - e.weight),
                        )
                    )
        hits.sort(key=lambda h: (-h.similarity, h.mw_delta, h.molecular_id))
        return hits[:limit]

    def search_substructure(self, query_smiles: str, limit: int = MAX_HITS) -> list[SearchHit]:
        """Fingerprint screen, then exact subgraph-embedding confirmation."""
        query = parse_smiles(query_smiles)
        qbits = fingerprint(query)
        query_mw = molecular_weight(query)
        hits = []
        for e in self._index():
            if not is_superset(e.bits, qbits):
                continue
            if find_embedding(query, e.graph) is None:
                continue
            hits.append(
                SearchHit(
                    record=e.record,
                    similarity=tanimoto(qbits, e.bits),
                    mw_delta=abs(query_mw - e.weight),
                )
            )
        hits.sort(key=lambda h: (-h.similarity, h.mw_delta, h.molecular_id))
        return hits[:limit]

    # -- advanced ------------------------------------------------------------

    def search_advanced(self, filters: AdvancedFilters, limit: int = MAX_HITS) -> list[SearchHit]:
        if filters.empty():
            raise SearchError("advanced search needs at least one filter")
        pattern = parse_formula_pattern(filters.formula) if filters.formula else None
        name = filters.name.strip().lower() if filters.name else None
        wanted_tags = {t.strip().lower() for t in filters.characteristics if t.strip()}

        hits = []
        for e in self._index():
            rec = e.record
            if name is not None and all(name not in ln for ln in e.lower_names):
                continue
            if pattern is not None and not _matches_formula(e.formula_counts, pattern):
                continue
            if filters.physical_state and rec.physical_state != filters.physical_state:
                continue
            if filters.weight_min is not None and e.weight < filters.weight_min:
                continue
            if filters.weight_max is not None and e.weight > filters.weight_max:
                continue
            if filters.compound_class and rec.compound_class != filters.compound_class:
                continue
            if filters.subclass and rec.subclass != filters.subclass:
                continue
            if filters.family and rec.family != filters.family:
                continue
            if wanted_tags and not wanted_tags <= {t.lower() for t in rec.characteristics}:
                continue
            hits.append(SearchHit(record=rec))
        hits.sort(key=lambda h: h.molecular_id)
        return hits[:limit]

    # -- quick-box dispatch --------------------------------------------------

    def quick_search(self, q: str, limit: int = MAX_HITS) -> tuple[str, list[SearchHit], str | None]:
        """Single-box search; mode auto-detected by syntax.

        Detection order: CASRN shape, molecular id, formula pattern,
        free-text name. Returns (mode, hits, warning)."""
        q = (q or "").strip()
        if not q:
            raise SearchError("empty query")
        if _CASRN_SHAPE.match(q):
            hits, warning = self.lookup(q)
            return "casrn", hits, warning
        if MOLECULAR_ID_RE.match(q):
            hits, warning = self.lookup(q)
            return "molecular_id", hits, warning
        if _looks_like_formula(q):
            try:
                return "formula", self.search_formula(q, limit), None
            except SearchError:
                pass
        return "name", self.search_name(q, limit), None


@lru_cache(maxsize=1)
def _known_elements() -> frozenset[str]:
    from thermobase.chem.elements import RECOGNIZED_ELEMENTS

    return frozenset(RECOGNIZED_ELEMENTS)


def _looks_like_formula(q: str) -> bool:
    pos = 0
    found = False
    while pos < len(q):
        m = _FORMULA_TOKEN.match(q, pos)
        if not m or not m.group(1) or m.group(1) not in _known_elements():
            return False
        found = True
        pos = m.end()
    return found
