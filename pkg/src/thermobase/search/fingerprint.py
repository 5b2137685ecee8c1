"""Path-hash fingerprints and Tanimoto similarity.

Every simple linear atom-bond path of 1..MAX_PATH_ATOMS atoms is encoded
as a direction-normalized string and hashed (stable CRC32) onto a
fixed-width bit set. Hydrogen counts are deliberately left out of the
encoding so that the subset property bits(sub) <= bits(super) holds for
substructure screening.
"""

from __future__ import annotations

import zlib

from thermobase.chem.graph import BondOrder, MolecularGraph

DEFAULT_BITS = 1024  # power of two
MAX_PATH_ATOMS = 7

_BOND_CHAR = {
    BondOrder.SINGLE: "-",
    BondOrder.DOUBLE: "=",
    BondOrder.TRIPLE: "#",
    BondOrder.AROMATIC: ":",
}


def _atom_code(mol: MolecularGraph, idx: int) -> str:
    atom = mol.atoms[idx]
    return atom.element.lower() if atom.aromatic else atom.element


def fingerprint(
    mol: MolecularGraph, n_bits: int = DEFAULT_BITS, max_atoms: int = MAX_PATH_ATOMS
) -> int:
    """Bit set as an arbitrary-precision integer bitmask."""
    if n_bits & (n_bits - 1):
        raise ValueError("fingerprint width must be a power of two")
    mask = 0
    seen_paths: set[str] = set()

    def extend(path: list[int], text: str) -> None:
        seen_paths.add(text)
        last = path[-1]
        # A path closing back onto its first atom also records a ring
        # variant, so ring sizes separate cyclic from acyclic isomers.
        if len(path) >= 3:
            closing = mol.bond_between(last, path[0])
            if closing is not None:
                seen_paths.add(text + _BOND_CHAR[closing.order] + "@")
        if len(path) >= max_atoms:
            return
        for nbr, bi in mol.adjacency[last]:
            if nbr in path:
                continue
            bond = mol.bonds[bi]
            extend(
                path + [nbr],
                text + _BOND_CHAR[bond.order] + _atom_code(mol, nbr),
            )

    for start in range(len(mol.atoms)):
        extend([start], _atom_code(mol, start))

    for text in seen_paths:
        canon = min(text, _reverse_path(text))
        bit = zlib.crc32(canon.encode("ascii")) & (n_bits - 1)
        mask |= 1 << bit
    return mask


def _reverse_path(text: str) -> str:
    """Reverse an atom-bond path string (atoms may be two characters)."""
    tokens: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "-=#:":
            tokens.append(ch)
            i += 1
        elif i + 1 < len(text) and text[i + 1].islower() and ch.isupper():
            tokens.append(text[i : i + 2])
            i += 2
        else:
            tokens.append(ch)
            i += 1
    return "".join(reversed(tokens))


def tanimoto(a: int, b: int) -> float:
    """|A & B| / |A | B| over bit sets; empty union gives 0."""
    union = (a | b).bit_count()
    if union == 0:
        return 0.0
    return (a & b).bit_count() / union


def is_superset(superset: int, subset: int) -> bool:
    return subset & ~superset == 0
