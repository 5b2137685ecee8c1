"""Search: name/formula/id/CASRN lookup, similarity, substructure, facets."""

from thermobase.search.characteristics import (
    CHARACTERISTIC_TAGS,
    DERIVED_TAGS,
    derive_characteristics,
)
from thermobase.search.engine import (
    ALLOWED_THRESHOLDS,
    MAX_HITS,
    AdvancedFilters,
    SearchEngine,
    SearchError,
    SearchHit,
    parse_formula_pattern,
)
from thermobase.search.fingerprint import fingerprint, is_superset, tanimoto
from thermobase.search.soundex import soundex
from thermobase.search.substructure import find_embedding, has_substructure

__all__ = [
    "ALLOWED_THRESHOLDS",
    "CHARACTERISTIC_TAGS",
    "DERIVED_TAGS",
    "MAX_HITS",
    "AdvancedFilters",
    "SearchEngine",
    "SearchError",
    "SearchHit",
    "derive_characteristics",
    "find_embedding",
    "fingerprint",
    "has_substructure",
    "is_superset",
    "parse_formula_pattern",
    "soundex",
    "tanimoto",
]
