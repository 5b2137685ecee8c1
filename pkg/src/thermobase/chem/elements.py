"""Element facts: symbols, standard valences, atomic weights.

Atomic weights come from a versioned data file bundled with the package
so that molecular weights are reproducible across installs.
"""

from __future__ import annotations

import json
from importlib import resources

from thermobase.chem.errors import UnsupportedElementError

# Elements usable without brackets in structure notations. Two-character
# symbols must be checked before their one-character prefixes.
ORGANIC_SUBSET = ("Br", "Cl", "B", "C", "N", "O", "P", "S", "F", "I")

# Subset that may carry the aromatic (lowercase) flag.
AROMATIC_CAPABLE = ("b", "c", "n", "o", "p", "s")

HALOGENS = frozenset({"F", "Cl", "Br", "I"})

# Standard valence alternatives, smallest first. Implicit hydrogens fill
# up to the smallest valence that accommodates the explicit bonds.
STANDARD_VALENCES: dict[str, tuple[int, ...]] = {
    "H": (1,),
    "B": (3,),
    "C": (4,),
    "N": (3, 5),
    "O": (2,),
    "P": (3, 5),
    "S": (2, 4, 6),
    "F": (1,),
    "Cl": (1,),
    "Br": (1,),
    "I": (1,),
}


def _load_weights() -> dict[str, float]:
    text = resources.files("thermobase.data").joinpath("atomic_weights.json").read_text()
    return {k: float(v) for k, v in json.loads(text)["weights"].items()}


ATOMIC_WEIGHTS: dict[str, float] = _load_weights()

RECOGNIZED_ELEMENTS = frozenset(ATOMIC_WEIGHTS)


def atomic_weight(element: str) -> float:
    try:
        return ATOMIC_WEIGHTS[element]
    except KeyError:
        raise UnsupportedElementError(f"no atomic weight for element {element!r}") from None


def require_element(symbol: str) -> str:
    """Validate an element symbol, returning it unchanged."""
    if symbol not in RECOGNIZED_ELEMENTS:
        raise UnsupportedElementError(f"unsupported element symbol {symbol!r}")
    return symbol


def default_valences(element: str) -> tuple[int, ...]:
    """Valence alternatives for implicit-hydrogen filling (may be empty)."""
    return STANDARD_VALENCES.get(element, ())
