"""Immutable molecular graph model.

A MolecularGraph is constructed once by a parser and never mutated, so
instances are safe to share across threads. Rings are perceived at
construction time and cached on the graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

from thermobase.chem.elements import HALOGENS, atomic_weight
from thermobase.chem.errors import ChemError, DisconnectedMoleculeError


class BondOrder(enum.Enum):
    SINGLE = "single"
    DOUBLE = "double"
    TRIPLE = "triple"
    AROMATIC = "aromatic"

    @property
    def valence_units(self) -> float:
        """Contribution of one bond of this order to an atom's valence."""
        return {self.SINGLE: 1.0, self.DOUBLE: 2.0, self.TRIPLE: 3.0, self.AROMATIC: 1.5}[self]


class BondStereo(enum.Enum):
    NONE = "none"
    CIS = "cis"
    TRANS = "trans"
    UNSPECIFIED = "unspecified"


@dataclass(frozen=True)
class Atom:
    index: int
    element: str
    aromatic: bool = False
    implicit_hydrogens: int = 0
    charge: int = 0
    isotope: int | None = None


@dataclass(frozen=True)
class Bond:
    """Bond between two atoms; endpoints are stored low-index first."""

    endpoints: tuple[int, int]
    order: BondOrder = BondOrder.SINGLE
    stereo: BondStereo = BondStereo.NONE

    def __post_init__(self):
        a, b = self.endpoints
        if a == b:
            raise ChemError(f"bond endpoints must differ, got {self.endpoints}")
        if a > b:
            object.__setattr__(self, "endpoints", (b, a))
        if self.stereo is not BondStereo.NONE and self.order is not BondOrder.DOUBLE:
            raise ChemError("bond stereo applies only to double bonds")

    def other(self, atom_index: int) -> int:
        a, b = self.endpoints
        return b if atom_index == a else a


@dataclass(frozen=True)
class Ring:
    """One ring of the minimum cycle basis, as an ordered atom cycle."""

    atoms: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.atoms)

    def __contains__(self, atom_index: int) -> bool:
        return atom_index in self.atoms


@dataclass(frozen=True)
class MolecularGraph:
    atoms: tuple[Atom, ...]
    bonds: tuple[Bond, ...]
    rings: tuple[Ring, ...] = field(default=())

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per atom: tuple of (neighbor index, bond index) pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self.atoms]
        for bi, bond in enumerate(self.bonds):
            a, b = bond.endpoints
            adj[a].append((b, bi))
            adj[b].append((a, bi))
        return tuple(tuple(x) for x in adj)

    @cached_property
    def _bond_by_pair(self) -> dict[tuple[int, int], Bond]:
        return {bond.endpoints: bond for bond in self.bonds}

    def neighbors(self, atom_index: int) -> tuple[int, ...]:
        return tuple(n for n, _ in self.adjacency[atom_index])

    def bond_between(self, a: int, b: int) -> Bond | None:
        return self._bond_by_pair.get((a, b) if a < b else (b, a))

    def degree(self, atom_index: int) -> int:
        return len(self.adjacency[atom_index])

    @cached_property
    def ring_sizes_per_atom(self) -> tuple[tuple[int, ...], ...]:
        """Sorted sizes of basis rings each atom belongs to."""
        sizes: list[list[int]] = [[] for _ in self.atoms]
        for ring in self.rings:
            for a in ring.atoms:
                sizes[a].append(ring.size)
        return tuple(tuple(sorted(s)) for s in sizes)

    def smallest_ring_size(self, atom_index: int) -> int:
        """Smallest basis ring containing the atom, 0 when acyclic."""
        sizes = self.ring_sizes_per_atom[atom_index]
        return sizes[0] if sizes else 0

    def total_hydrogens(self) -> int:
        return sum(a.implicit_hydrogens for a in self.atoms)

    def validate_connected(self) -> None:
        if not self.atoms:
            raise ChemError("empty molecule")
        seen = {0}
        stack = [0]
        while stack:
            for n, _ in self.adjacency[stack.pop()]:
                if n not in seen:
                    seen.add(n)
                    stack.append(n)
        if len(seen) != len(self.atoms):
            raise DisconnectedMoleculeError(
                f"molecule has {len(self.atoms) - len(seen)} atoms outside the main fragment"
            )


# Rendering order for molecular formulas: carbon, hydrogen, halogens,
# then N, O, S, then anything else alphabetically.
_FORMULA_ORDER = ("C", "H", "Br", "Cl", "F", "I", "N", "O", "S")


@dataclass(frozen=True)
class MolecularFormula:
    element_counts: dict[str, int]

    def __str__(self) -> str:
        parts = []
        counts = dict(self.element_counts)
        for el in _FORMULA_ORDER:
            n = counts.pop(el, 0)
            if n:
                parts.append(el if n == 1 else f"{el}{n}")
        for el in sorted(counts):
            n = counts[el]
            if n:
                parts.append(el if n == 1 else f"{el}{n}")
        return "".join(parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, MolecularFormula):
            return self.element_counts == other.element_counts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.element_counts.items()))


def molecular_formula(mol: MolecularGraph) -> MolecularFormula:
    """Element counts including implicit hydrogens."""
    counts: dict[str, int] = {}
    for atom in mol.atoms:
        counts[atom.element] = counts.get(atom.element, 0) + 1
        if atom.implicit_hydrogens:
            counts["H"] = counts.get("H", 0) + atom.implicit_hydrogens
    return MolecularFormula({k: v for k, v in counts.items() if v})


def molecular_weight(mol: MolecularGraph) -> float:
    """Sum of standard atomic weights over all atoms, implicit H included."""
    total = 0.0
    for atom in mol.atoms:
        total += atomic_weight(atom.element)
        total += atom.implicit_hydrogens * atomic_weight("H")
    return total


def is_hydrocarbon(mol: MolecularGraph) -> bool:
    return all(a.element == "C" for a in mol.atoms)


def contains_halogen(mol: MolecularGraph) -> bool:
    return any(a.element in HALOGENS for a in mol.atoms)
