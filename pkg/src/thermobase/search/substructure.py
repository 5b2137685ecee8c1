"""Exact subgraph-embedding check for substructure search.

Backtracking match over atom candidates ordered rarest-element-first.
An embedding must respect element, aromatic flag, and bond order; a
query bond must map onto a target bond of identical order, and target
bonds between mapped atoms that have no query counterpart are allowed
(substructure, not induced subgraph, semantics for atoms; bonds between
mapped query atoms must exist in the query to be required).
"""

from __future__ import annotations

from collections import Counter

from thermobase.chem.graph import MolecularGraph


def _atom_compatible(query: MolecularGraph, q: int, target: MolecularGraph, t: int) -> bool:
    qa, ta = query.atoms[q], target.atoms[t]
    return (
        qa.element == ta.element
        and qa.aromatic == ta.aromatic
        and query.degree(q) <= target.degree(t)
    )


def find_embedding(query: MolecularGraph, target: MolecularGraph) -> dict[int, int] | None:
    """One query-atom -> target-atom mapping, or None."""
    nq = len(query.atoms)
    if nq > len(target.atoms) or len(query.bonds) > len(target.bonds):
        return None

    # Order query atoms rarest element first, then keep the mapping
    # connected so each new atom is constrained by a mapped neighbor.
    rarity = Counter(a.element for a in target.atoms)
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(range(nq))
    while remaining:
        candidates = [q for q in remaining if any(n in placed for n in query.neighbors(q))]
        pool = candidates or list(remaining)
        nxt = min(
            pool,
            key=lambda q: (rarity.get(query.atoms[q].element, 0), -query.degree(q), q),
        )
        order.append(nxt)
        placed.add(nxt)
        remaining.remove(nxt)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(pos: int) -> bool:
        if pos == nq:
            return True
        q = order[pos]
        anchored = [
            (n, query.bond_between(q, n)) for n in query.neighbors(q) if n in mapping
        ]
        if anchored:
            n0, b0 = anchored[0]
            pool = [t for t, _ in target.adjacency[mapping[n0]]]
        else:
            pool = range(len(target.atoms))
        for t in pool:
            if t in used or not _atom_compatible(query, q, target, t):
                continue
            ok = True
            for n, qbond in anchored:
                tbond = target.bond_between(t, mapping[n])
                if tbond is None or tbond.order is not qbond.order:
                    ok = False
                    break
            if not ok:
                continue
            mapping[q] = t
            used.add(t)
            if backtrack(pos + 1):
                return True
            del mapping[q]
            used.remove(t)
        return False

    return dict(mapping) if backtrack(0) else None


def has_substructure(query: MolecularGraph, target: MolecularGraph) -> bool:
    return find_embedding(query, target) is not None
