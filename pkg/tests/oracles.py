"""Independent test oracles and generators shared across test modules.

These deliberately avoid the production code paths they check: the
embedding oracle enumerates candidate products exhaustively instead of
backtracking over the engine's ordering, and the generator builds
graphs directly from drafts.
"""

from __future__ import annotations

import itertools
import random

from thermobase.chem import MolecularGraph
from thermobase.chem.assemble import AtomDraft, BondDraft, assemble
from thermobase.chem.graph import BondOrder


def brute_force_embedding_exists(query: MolecularGraph, target: MolecularGraph) -> bool:
    """Exhaustive subgraph-embedding check by candidate-product enumeration."""
    tq = [(a.element, a.aromatic) for a in query.atoms]
    tt = [(a.element, a.aromatic) for a in target.atoms]
    candidates = [
        [t for t in range(len(tt))
         if tt[t] == tq[q] and target.degree(t) >= query.degree(q)]
        for q in range(len(tq))
    ]
    if any(not c for c in candidates):
        return False
    for combo in itertools.product(*candidates):
        if len(set(combo)) != len(combo):
            continue
        ok = True
        for bond in query.bonds:
            a, b = bond.endpoints
            tb = target.bond_between(combo[a], combo[b])
            if tb is None or tb.order is not bond.order:
                ok = False
                break
        if ok:
            return True
    return False


def random_hydrocarbon(rng: random.Random, min_atoms: int = 4, max_atoms: int = 12) -> MolecularGraph:
    """Random in-domain hydrocarbon: alkane tree, cycloalkane, or alkylbenzene."""
    n = rng.randint(min_atoms, max_atoms)
    kind = rng.choice(["chain", "ring", "arene"])
    atoms: list[AtomDraft] = []
    bonds: list[BondDraft] = []
    capacity: list[int] = []  # remaining attachment slots per atom

    if kind == "ring" and n >= 5:
        size = rng.choice([5, 6] if n >= 6 else [5])
        for i in range(size):
            atoms.append(AtomDraft(element="C"))
            capacity.append(2)
        for i in range(size):
            bonds.append(BondDraft(a=i, b=(i + 1) % size))
    elif kind == "arene" and n >= 7:
        for i in range(6):
            atoms.append(AtomDraft(element="C", aromatic=True))
            capacity.append(1)
        for i in range(6):
            bonds.append(BondDraft(a=i, b=(i + 1) % 6, order=BondOrder.AROMATIC))
    else:
        atoms.append(AtomDraft(element="C"))
        capacity.append(4)

    while len(atoms) < n:
        hosts = [i for i, c in enumerate(capacity) if c > 0]
        if not hosts:
            break
        host = rng.choice(hosts)
        idx = len(atoms)
        atoms.append(AtomDraft(element="C"))
        capacity.append(3)
        capacity[host] -= 1
        bonds.append(BondDraft(a=host, b=idx))

    return assemble(atoms, bonds)
