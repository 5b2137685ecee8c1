"""Structure parsing, molecular graph model, and canonical SMILES."""

from thermobase.chem.canonical import canonical_form, canonical_ranks, write_smiles
from thermobase.chem.errors import (
    ChemError,
    DisconnectedMoleculeError,
    MolfileError,
    SmilesParseError,
    UnclosedRingError,
    UnsupportedElementError,
    ValenceError,
)
from thermobase.chem.graph import (
    Atom,
    Bond,
    BondOrder,
    BondStereo,
    MolecularFormula,
    MolecularGraph,
    Ring,
    is_hydrocarbon,
    molecular_formula,
    molecular_weight,
)
from thermobase.chem.molfile import parse_molfile
from thermobase.chem.smiles import parse_smiles

__all__ = [
    "Atom",
    "Bond",
    "BondOrder",
    "BondStereo",
    "ChemError",
    "DisconnectedMoleculeError",
    "MolecularFormula",
    "MolecularGraph",
    "MolfileError",
    "Ring",
    "SmilesParseError",
    "UnclosedRingError",
    "UnsupportedElementError",
    "ValenceError",
    "canonical_form",
    "canonical_ranks",
    "is_hydrocarbon",
    "molecular_formula",
    "molecular_weight",
    "parse_molfile",
    "parse_smiles",
    "write_smiles",
]
