"""Structured errors raised by the structure-parsing layer.

Every malformed input maps to one of these types; callers can rely on
catching ChemError to handle any rejected structure.
"""


class ChemError(ValueError):
    """Base class for all structure parsing and validation errors."""


class SmilesParseError(ChemError):
    """Syntax or semantic error in a SMILES string.

    Carries the 0-based character position where the problem was detected
    (``position`` is None when the error has no single location).
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnclosedRingError(SmilesParseError):
    """A ring-closure digit was opened but never closed."""


class UnsupportedElementError(ChemError):
    """Element symbol outside the supported set."""


class ValenceError(ChemError):
    """Bond orders around an atom exceed every standard valence."""


class DisconnectedMoleculeError(ChemError):
    """Input encodes more than one connected fragment."""


class MolfileError(ChemError):
    """Malformed V2000 connection table."""
