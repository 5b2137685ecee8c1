"""Functional-group characteristic tags.

A core subset is detected from the molecular graph; the remaining tags
of the search vocabulary (peroxide, amide, radical, ...) are only ever
supplied by ingested data, never derived.
"""

from __future__ import annotations

from thermobase.chem.elements import HALOGENS
from thermobase.chem.graph import BondOrder, MolecularGraph

# Full checkbox vocabulary accepted by advanced search filters.
CHARACTERISTIC_TAGS = (
    "alkane", "alkene", "alkyne", "arene",
    "alcohol", "ether", "peroxide", "aldehyde", "ketone",
    "carboxylic acid", "ester",
    "amine", "hydrazine", "imine", "nitrile/isonitrile",
    "nox", "amide",
    "thiol", "thioether", "polysulphide", "thiocarbonyl", "sox",
    "halogen",
    "radical", "charges", "ionic", "solvation", "polymer",
)

DERIVED_TAGS = (
    "alkane", "alkene", "alkyne", "arene", "alcohol", "ether", "aldehyde",
    "ketone", "carboxylic acid", "ester", "amine", "nitrile/isonitrile",
    "thiol", "thioether", "halogen",
)


def _double_bonded(mol: MolecularGraph, idx: int, element: str) -> list[int]:
    out = []
    for nbr, bi in mol.adjacency[idx]:
        if mol.bonds[bi].order is BondOrder.DOUBLE and mol.atoms[nbr].element == element:
            out.append(nbr)
    return out


def derive_characteristics(mol: MolecularGraph) -> set[str]:
    """Pattern-detected tags for the core functional groups."""
    tags: set[str] = set()
    atoms = mol.atoms

    if any(a.aromatic for a in atoms):
        tags.add("arene")
    if any(a.element in HALOGENS for a in atoms):
        tags.add("halogen")

    for bond in mol.bonds:
        a, b = bond.endpoints
        if atoms[a].element == "C" and atoms[b].element == "C":
            if bond.order is BondOrder.DOUBLE:
                tags.add("alkene")
            elif bond.order is BondOrder.TRIPLE:
                tags.add("alkyne")

    if all(a.element == "C" for a in atoms) and all(
        b.order is BondOrder.SINGLE for b in mol.bonds
    ):
        tags.add("alkane")

    for atom in atoms:
        idx = atom.index
        if atom.element == "O":
            heavy = mol.neighbors(idx)
            carbons = [n for n in heavy if atoms[n].element == "C"]
            if _double_bonded(mol, idx, "C"):
                # Carbonyl oxygen: classify through the carbon.
                c = _double_bonded(mol, idx, "C")[0]
                c_neighbors = [n for n in mol.neighbors(c) if n != idx]
                c_carbons = [n for n in c_neighbors if atoms[n].element == "C"]
                ester_o = False
                acid_o = False
                for n in c_neighbors:
                    if atoms[n].element == "O":
                        if atoms[n].implicit_hydrogens:
                            acid_o = True
                        elif len(mol.neighbors(n)) == 2:
                            ester_o = True
                if acid_o:
                    tags.add("carboxylic acid")
                elif ester_o:
                    tags.add("ester")
                elif len(c_carbons) == 2:
                    tags.add("ketone")
                elif atoms[c].implicit_hydrogens:
                    tags.add("aldehyde")
            elif atom.implicit_hydrogens and len(carbons) == 1:
                c = carbons[0]
                if not _double_bonded(mol, c, "O"):
                    tags.add("alcohol")
            elif not atom.implicit_hydrogens and len(carbons) == 2:
                if not any(_double_bonded(mol, c, "O") for c in carbons):
                    tags.add("ether")
        elif atom.element == "N":
            orders = [mol.bonds[bi].order for _, bi in mol.adjacency[idx]]
            if any(o is BondOrder.TRIPLE for o in orders):
                tags.add("nitrile/isonitrile")
            elif orders and all(o is BondOrder.SINGLE for o in orders) and not atom.aromatic:
                next_to_carbonyl = any(
                    _double_bonded(mol, n, "O")
                    for n in mol.neighbors(idx)
                    if atoms[n].element == "C"
                )
                if not next_to_carbonyl:
                    tags.add("amine")
        elif atom.element == "S":
            carbons = [n for n in mol.neighbors(idx) if atoms[n].element == "C"]
            if atom.implicit_hydrogens and carbons:
                tags.add("thiol")
            elif not atom.implicit_hydrogens and len(carbons) == 2 and all(
                mol.bonds[bi].order is BondOrder.SINGLE for _, bi in mol.adjacency[idx]
            ):
                tags.add("thioether")

    return tags
