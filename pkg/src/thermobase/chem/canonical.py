"""Canonical SMILES generation.

Atoms are ranked by iterative neighborhood refinement seeded with local
invariants (element, degree, hydrogen count, charge, smallest ring
size). Remaining ties are broken by branching over every member of the
first tied cell; each branch yields one complete ordering and one SMILES
string, and the lexicographically smallest string wins. The output drops
stereo marks and isotopes, so identical structures in different
notations collapse to one form.
"""

from __future__ import annotations

import heapq
import sys

from thermobase.chem.elements import AROMATIC_CAPABLE, ORGANIC_SUBSET, default_valences
from thermobase.chem.errors import ChemError
from thermobase.chem.graph import BondOrder, MolecularGraph

# Branch exploration cap. Beyond it the search keeps the best string so
# far; renumbering invariance is then no longer guaranteed, but typical
# molecules need well under a hundred leaves.
_MAX_LEAVES = 4096

_BOND_RANK = {
    BondOrder.SINGLE: 1,
    BondOrder.DOUBLE: 2,
    BondOrder.TRIPLE: 3,
    BondOrder.AROMATIC: 4,
}


def _dense(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _initial_ranks(mol: MolecularGraph) -> list[int]:
    keys = []
    for atom in mol.atoms:
        keys.append(
            (
                atom.element,
                atom.aromatic,
                mol.degree(atom.index),
                atom.implicit_hydrogens,
                atom.charge,
                mol.smallest_ring_size(atom.index),
            )
        )
    return _dense(keys)


def _refine(mol: MolecularGraph, ranks: list[int]) -> list[int]:
    while True:
        keys = []
        for i in range(len(ranks)):
            neigh = sorted(
                (_BOND_RANK[mol.bonds[bi].order], ranks[j])
                for j, bi in mol.adjacency[i]
            )
            keys.append((ranks[i], tuple(neigh)))
        new = _dense(keys)
        if new == ranks:
            return ranks
        ranks = new


def _first_tied_cell(ranks: list[int]) -> list[int] | None:
    by_rank: dict[int, list[int]] = {}
    for i, r in enumerate(ranks):
        by_rank.setdefault(r, []).append(i)
    for r in sorted(by_rank):
        if len(by_rank[r]) > 1:
            return by_rank[r]
    return None


def canonical_ranks(mol: MolecularGraph) -> list[int]:
    """The complete atom ranking whose SMILES string wins."""
    return _best_string_and_ranks(mol)[1]


def canonical_form(mol: MolecularGraph) -> str:
    """Canonical SMILES, invariant under input atom renumbering."""
    return _best_string_and_ranks(mol)[0]


def _best_string_and_ranks(mol: MolecularGraph) -> tuple[str, list[int]]:
    base = _refine(mol, _initial_ranks(mol))
    best: list[tuple[str, list[int]] | None] = [None]
    leaves = [0]

    def descend(ranks: list[int]) -> None:
        if leaves[0] >= _MAX_LEAVES:
            return
        cell = _first_tied_cell(ranks)
        if cell is None:
            leaves[0] += 1
            s = write_smiles(mol, ranks)
            if best[0] is None or s < best[0][0]:
                best[0] = (s, ranks)
            return
        for atom in cell:
            bumped = [r * 2 for r in ranks]
            bumped[atom] -= 1
            descend(_refine(mol, _dense(bumped)))

    descend(base)
    if best[0] is None:
        raise ChemError("canonicalization produced no labeling")
    return best[0]


def _auto_fill(mol: MolecularGraph, idx: int) -> int:
    """Hydrogen count a parser would infer for this atom written bare."""
    atom = mol.atoms[idx]
    orders = [mol.bonds[bi].order for _, bi in mol.adjacency[idx]]
    if atom.aromatic:
        units = sum(1.0 if o is BondOrder.AROMATIC else o.valence_units for o in orders)
        if atom.element in ("C", "N", "P", "B"):
            units += 1.0
    else:
        units = sum(o.valence_units for o in orders)
    for v in default_valences(atom.element):
        if v >= units:
            return max(0, int(v - units))
    return -1  # never matches a real hydrogen count


def _atom_token(mol: MolecularGraph, idx: int) -> str:
    atom = mol.atoms[idx]
    symbol = atom.element.lower() if atom.aromatic else atom.element
    bracket = (
        atom.charge != 0
        or (atom.aromatic and atom.element.lower() not in AROMATIC_CAPABLE)
        or (not atom.aromatic and atom.element not in ORGANIC_SUBSET)
        or atom.implicit_hydrogens != _auto_fill(mol, idx)
    )
    if not bracket:
        return symbol
    h = atom.implicit_hydrogens
    htok = "" if h == 0 else ("H" if h == 1 else f"H{h}")
    c = atom.charge
    ctok = "" if c == 0 else ("+" if c == 1 else "-" if c == -1 else f"{c:+d}")
    return f"[{symbol}{htok}{ctok}]"


def _bond_token(mol: MolecularGraph, a: int, b: int) -> str:
    order = mol.bond_between(a, b).order
    if order is BondOrder.SINGLE:
        # Explicit '-' keeps a single bond between two aromatic atoms
        # from reading back as aromatic.
        if mol.atoms[a].aromatic and mol.atoms[b].aromatic:
            return "-"
        return ""
    if order is BondOrder.DOUBLE:
        return "="
    if order is BondOrder.TRIPLE:
        return "#"
    return ""  # aromatic bonds are implicit between aromatic atoms


def write_smiles(mol: MolecularGraph, ranks: list[int] | None = None) -> str:
    """Write a SMILES string visiting atoms in rank order.

    Stereo marks and isotopes are never written. With ranks omitted the
    input atom order is used (useful for debugging, not canonical).
    """
    n = len(mol.atoms)
    if ranks is None:
        ranks = list(range(n))
    start = min(range(n), key=lambda i: (ranks[i], i))

    children: dict[int, list[int]] = {i: [] for i in range(n)}
    closures_at: dict[int, list[int]] = {i: [] for i in range(n)}
    visit_pos: dict[int, int] = {}
    seen_back: set[tuple[int, int]] = set()

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 20 * n + 100))
    try:

        def dfs(u: int, parent: int) -> None:
            visit_pos[u] = len(visit_pos)
            for v in sorted(mol.neighbors(u), key=lambda x: (ranks[x], x)):
                if v == parent:
                    continue
                if v in visit_pos:
                    key = (min(u, v), max(u, v))
                    if key not in seen_back:
                        seen_back.add(key)
                        closures_at[u].append(v)
                        closures_at[v].append(u)
                else:
                    children[u].append(v)
                    dfs(v, u)

        dfs(start, -1)
        if len(visit_pos) != n:
            raise ChemError("cannot write SMILES for a disconnected graph")

        out: list[str] = []
        open_digit: dict[tuple[int, int], int] = {}
        free_digits: list[int] = []
        next_digit = [1]

        def take_digit() -> int:
            if free_digits:
                return heapq.heappop(free_digits)
            d = next_digit[0]
            next_digit[0] += 1
            return d

        def digit_token(d: int) -> str:
            return str(d) if d < 10 else f"%{d:02d}"

        def emit(u: int) -> None:
            out.append(_atom_token(mol, u))
            for v in sorted(closures_at[u], key=lambda x: visit_pos[x]):
                key = (min(u, v), max(u, v))
                if key in open_digit:
                    d = open_digit.pop(key)
                    heapq.heappush(free_digits, d)
                else:
                    d = take_digit()
                    open_digit[key] = d
                out.append(_bond_token(mol, u, v) + digit_token(d))
            kids = children[u]
            for i, v in enumerate(kids):
                last = i == len(kids) - 1
                if not last:
                    out.append("(")
                out.append(_bond_token(mol, u, v))
                emit(v)
                if not last:
                    out.append(")")

        emit(start)
    finally:
        sys.setrecursionlimit(old_limit)
    return "".join(out)
