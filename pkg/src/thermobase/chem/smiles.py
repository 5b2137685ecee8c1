"""SMILES reader for single-fragment organic molecules.

Supported notation: organic-subset atoms (B, C, N, O, P, S, F, Cl, Br, I),
aromatic lowercase atoms, bracket atoms with isotope/H-count/charge,
bond symbols ``- = # :``, directional ``/ \\`` marks on double bonds,
branches, and ring closures (digits and ``%nn``). Multi-fragment input
(``.``) is rejected: the compound store holds single molecules.

Tetrahedral chirality marks (``@``/``@@``) inside brackets are accepted
and discarded; only double-bond cis/trans is modeled.
"""

from __future__ import annotations

import re

from thermobase.chem.assemble import AtomDraft, BondDraft, assemble
from thermobase.chem.errors import (
    DisconnectedMoleculeError,
    SmilesParseError,
    UnclosedRingError,
)
from thermobase.chem.graph import BondOrder, MolecularGraph

_BOND_CHARS = {
    "-": BondOrder.SINGLE,
    "=": BondOrder.DOUBLE,
    "#": BondOrder.TRIPLE,
    ":": BondOrder.AROMATIC,
}

_BRACKET_RE = re.compile(
    r"""^(?P<isotope>\d+)?
        (?P<symbol>[A-Z][a-z]?|[bcnops])
        (?P<chiral>@{1,2})?
        (?P<hcount>H\d*)?
        (?P<charge>\+\+|--|[+-]\d*)?
        (?::\d+)?$""",
    re.X,
)

_TWO_LETTER = ("Cl", "Br")
_ONE_LETTER = set("BCNOPSFI")
_AROMATIC_LETTERS = set("bcnops")


def _parse_bracket(body: str, position: int) -> AtomDraft:
    m = _BRACKET_RE.match(body)
    if not m:
        raise SmilesParseError(f"malformed bracket atom [{body}]", position)
    symbol = m.group("symbol")
    aromatic = symbol[0].islower()
    element = symbol.capitalize() if aromatic else symbol

    hcount = 0
    if m.group("hcount"):
        digits = m.group("hcount")[1:]
        hcount = int(digits) if digits else 1

    charge = 0
    raw = m.group("charge")
    if raw:
        if raw in ("++", "--"):
            charge = 2 if raw == "++" else -2
        elif len(raw) == 1:
            charge = 1 if raw == "+" else -1
        else:
            charge = int(raw)

    isotope = int(m.group("isotope")) if m.group("isotope") else None
    return AtomDraft(
        element=element,
        aromatic=aromatic,
        charge=charge,
        isotope=isotope,
        explicit_h=hcount,
        position=position,
    )


def parse_smiles(smiles: str) -> MolecularGraph:
    """Parse a SMILES string into a validated molecular graph."""
    if not smiles:
        raise SmilesParseError("empty SMILES input")
    if not smiles.isascii():
        bad = next(i for i, ch in enumerate(smiles) if not ch.isascii())
        raise SmilesParseError("SMILES must be ASCII", bad)

    atoms: list[AtomDraft] = []
    bonds: list[BondDraft] = []
    anchor: int | None = None
    branch_stack: list[int] = []
    pending_order: BondOrder | None = None
    pending_dir = 0
    pending_pos: int | None = None
    # open ring digit -> (atom index, bond order or None, direction, position)
    open_rings: dict[int, tuple[int, BondOrder | None, int, int]] = {}

    def add_atom(draft: AtomDraft, pos: int) -> None:
        nonlocal anchor, pending_order, pending_dir
        idx = len(atoms)
        atoms.append(draft)
        if anchor is not None:
            bonds.append(
                BondDraft(a=anchor, b=idx, order=pending_order, direction=pending_dir)
            )
        elif pending_order is not None or pending_dir:
            raise SmilesParseError("bond symbol without a preceding atom", pos)
        anchor = idx
        pending_order = None
        pending_dir = 0

    def close_or_open_ring(num: int, pos: int) -> None:
        nonlocal pending_order, pending_dir
        if anchor is None:
            raise SmilesParseError("ring closure before any atom", pos)
        if num in open_rings:
            other, order0, dir0, pos0 = open_rings.pop(num)
            if other == anchor:
                raise SmilesParseError(f"ring bond {num} closes on its own atom", pos)
            order = pending_order
            if order0 is not None and order is not None and order0 != order:
                raise SmilesParseError(
                    f"conflicting bond orders on ring closure {num}", pos
                )
            # A mark at the opening side reads other->anchor; one at the
            # closing side reads anchor->other.
            direction = dir0 if dir0 else -pending_dir
            if dir0 and pending_dir and dir0 != -pending_dir:
                raise SmilesParseError(
                    f"conflicting stereo marks on ring closure {num}", pos
                )
            bonds.append(
                BondDraft(a=other, b=anchor,
                          order=order if order is not None else order0,
                          direction=direction)
            )
        else:
            open_rings[num] = (anchor, pending_order, pending_dir, pos)
        pending_order = None
        pending_dir = 0

    i = 0
    n = len(smiles)
    while i < n:
        ch = smiles[i]
        if ch == "[":
            end = smiles.find("]", i)
            if end < 0:
                raise SmilesParseError("unterminated bracket atom", i)
            add_atom(_parse_bracket(smiles[i + 1 : end], i), i)
            i = end + 1
        elif smiles[i : i + 2] in _TWO_LETTER:
            add_atom(AtomDraft(element=smiles[i : i + 2], position=i), i)
            i += 2
        elif ch in _ONE_LETTER:
            add_atom(AtomDraft(element=ch, position=i), i)
            i += 1
        elif ch in _AROMATIC_LETTERS:
            add_atom(AtomDraft(element=ch.upper(), aromatic=True, position=i), i)
            i += 1
        elif ch in _BOND_CHARS:
            if pending_order is not None:
                raise SmilesParseError("two consecutive bond symbols", i)
            pending_order = _BOND_CHARS[ch]
            pending_pos = i
            i += 1
        elif ch in "/\\":
            if pending_dir:
                raise SmilesParseError("two consecutive stereo marks", i)
            pending_dir = 1 if ch == "/" else -1
            pending_pos = i
            i += 1
        elif ch == "(":
            if anchor is None:
                raise SmilesParseError("branch opened before any atom", i)
            branch_stack.append(anchor)
            i += 1
        elif ch == ")":
            if not branch_stack:
                raise SmilesParseError("unmatched closing parenthesis", i)
            if pending_order is not None or pending_dir:
                raise SmilesParseError("dangling bond symbol before ')'", pending_pos)
            anchor = branch_stack.pop()
            i += 1
        elif ch.isdigit():
            close_or_open_ring(int(ch), i)
            i += 1
        elif ch == "%":
            if i + 2 >= n or not smiles[i + 1 : i + 3].isdigit():
                raise SmilesParseError("'%' ring closure needs two digits", i)
            close_or_open_ring(int(smiles[i + 1 : i + 3]), i)
            i += 3
        elif ch == ".":
            raise DisconnectedMoleculeError(
                "multi-fragment SMILES ('.') is not accepted; store one compound per entry"
            )
        else:
            raise SmilesParseError(f"unexpected character {ch!r}", i)

    if open_rings:
        num, (_, _, _, pos) = sorted(open_rings.items())[0]
        raise UnclosedRingError(f"ring bond {num} was never closed", pos)
    if branch_stack:
        raise SmilesParseError("unclosed branch parenthesis", n - 1)
    if pending_order is not None or pending_dir:
        raise SmilesParseError("dangling bond symbol at end of input", pending_pos)

    return assemble(atoms, bonds)
