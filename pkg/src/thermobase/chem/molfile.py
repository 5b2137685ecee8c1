"""MDL V2000 connection-table reader.

Coordinates are discarded; only elements, bonds, and charges survive.
Explicit hydrogen atoms are folded into their neighbor's hydrogen count.
Aromaticity is perceived from alternating single/double rings (bond
type 4 entries are honored directly).
"""

from __future__ import annotations

from thermobase.chem.assemble import AtomDraft, BondDraft, assemble
from thermobase.chem.errors import MolfileError
from thermobase.chem.graph import BondOrder, MolecularGraph

_BOND_TYPES = {
    1: BondOrder.SINGLE,
    2: BondOrder.DOUBLE,
    3: BondOrder.TRIPLE,
    4: BondOrder.AROMATIC,
}

# Legacy charge column: 1..7 codes, 0 = none (3 = +1, 5 = -1 etc.).
_CHARGE_CODES = {0: 0, 1: 3, 2: 2, 3: 1, 5: -1, 6: -2, 7: -3}


def parse_molfile(text: str) -> MolecularGraph:
    """Parse a V2000 molfile (or bare connection table) into a graph."""
    lines = text.splitlines()
    counts_idx = _find_counts_line(lines)
    counts = lines[counts_idx]
    try:
        n_atoms = int(counts[0:3])
        n_bonds = int(counts[3:6])
    except (ValueError, IndexError):
        raise MolfileError(f"malformed counts line: {counts!r}") from None
    if n_atoms <= 0:
        raise MolfileError("counts line declares no atoms")

    atom_lines = lines[counts_idx + 1 : counts_idx + 1 + n_atoms]
    bond_lines = lines[counts_idx + 1 + n_atoms : counts_idx + 1 + n_atoms + n_bonds]
    if len(atom_lines) < n_atoms or len(bond_lines) < n_bonds:
        raise MolfileError(
            f"counts line declares {n_atoms} atoms / {n_bonds} bonds "
            "but the table is shorter"
        )

    atoms: list[AtomDraft] = []
    for ln in atom_lines:
        fields = ln.split()
        if len(fields) < 4:
            raise MolfileError(f"malformed atom line: {ln!r}")
        element = fields[3]
        charge_code = 0
        if len(fields) > 5 and fields[5].isdigit():
            charge_code = int(fields[5])
        atoms.append(
            AtomDraft(element=element, charge=_CHARGE_CODES.get(charge_code, 0))
        )

    bonds: list[BondDraft] = []
    for ln in bond_lines:
        a, b, btype = _parse_bond_line(ln)
        if not (1 <= a <= n_atoms and 1 <= b <= n_atoms):
            raise MolfileError(f"bond references missing atom: {ln!r}")
        bonds.append(BondDraft(a=a - 1, b=b - 1, order=_BOND_TYPES[btype]))
        if _BOND_TYPES[btype] is BondOrder.AROMATIC:
            atoms[a - 1].aromatic = True
            atoms[b - 1].aromatic = True

    # M  CHG property lines override the legacy charge column.
    for ln in lines[counts_idx + 1 + n_atoms + n_bonds :]:
        if ln.startswith("M  CHG"):
            fields = ln.split()
            pairs = fields[3:]
            for ai, chg in zip(pairs[0::2], pairs[1::2]):
                idx = int(ai) - 1
                if 0 <= idx < n_atoms:
                    atoms[idx].charge = int(chg)
        if ln.startswith("M  END"):
            break

    atoms, bonds = _fold_explicit_hydrogens(atoms, bonds)
    return assemble(atoms, bonds)


def _find_counts_line(lines: list[str]) -> int:
    """Counts line is the 4th line of a full molfile, or the first line
    that looks like one in a bare table."""
    for idx in (3, 0):
        if idx < len(lines):
            ln = lines[idx]
            if "V2000" in ln:
                return idx
    raise MolfileError("no V2000 counts line found")


def _parse_bond_line(ln: str) -> tuple[int, int, int]:
    # Fixed-width columns first; fall back to whitespace split for
    # hand-written fixtures.
    try:
        a, b, t = int(ln[0:3]), int(ln[3:6]), int(ln[6:9])
    except (ValueError, IndexError):
        fields = ln.split()
        if len(fields) < 3:
            raise MolfileError(f"malformed bond line: {ln!r}") from None
        try:
            a, b, t = int(fields[0]), int(fields[1]), int(fields[2])
        except ValueError:
            raise MolfileError(f"malformed bond line: {ln!r}") from None
    if t not in _BOND_TYPES:
        raise MolfileError(f"unsupported bond type {t}")
    return a, b, t


def _fold_explicit_hydrogens(
    atoms: list[AtomDraft], bonds: list[BondDraft]
) -> tuple[list[AtomDraft], list[BondDraft]]:
    degree: dict[int, int] = {}
    for bd in bonds:
        degree[bd.a] = degree.get(bd.a, 0) + 1
        degree[bd.b] = degree.get(bd.b, 0) + 1

    fold: dict[int, int] = {}  # H atom index -> heavy neighbor
    for bd in bonds:
        if bd.order is not BondOrder.SINGLE:
            continue
        for h, heavy in ((bd.a, bd.b), (bd.b, bd.a)):
            at = atoms[h]
            if (
                at.element == "H"
                and at.charge == 0
                and at.isotope is None
                and degree.get(h) == 1
                and atoms[heavy].element != "H"
            ):
                fold[h] = heavy

    if not fold:
        return atoms, bonds

    folded_counts: dict[int, int] = {}
    for h, heavy in fold.items():
        folded_counts[heavy] = folded_counts.get(heavy, 0) + 1

    keep = [i for i in range(len(atoms)) if i not in fold]
    remap = {old: new for new, old in enumerate(keep)}
    new_atoms = []
    for old in keep:
        d = atoms[old]
        if old in folded_counts:
            d.explicit_h = (d.explicit_h or 0) + folded_counts[old]
        new_atoms.append(d)
    new_bonds = [
        BondDraft(a=remap[bd.a], b=remap[bd.b], order=bd.order, direction=bd.direction)
        for bd in bonds
        if bd.a not in fold and bd.b not in fold
    ]
    return new_atoms, new_bonds
