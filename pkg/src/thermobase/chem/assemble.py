"""Shared assembly of parsed atom/bond drafts into a MolecularGraph.

Both notation parsers produce drafts; this module resolves aromatic
bonds, fills implicit hydrogens, perceives rings and Kekulé aromaticity,
and resolves double-bond stereo from directional marks.
"""

from __future__ import annotations

from dataclasses import dataclass

from thermobase.chem.elements import (
    AROMATIC_CAPABLE,
    RECOGNIZED_ELEMENTS,
    default_valences,
)
from thermobase.chem.errors import (
    SmilesParseError,
    UnsupportedElementError,
    ValenceError,
)
from thermobase.chem.graph import Atom, Bond, BondOrder, BondStereo, MolecularGraph, Ring
from thermobase.chem.rings import minimum_cycle_basis


@dataclass
class AtomDraft:
    element: str
    aromatic: bool = False
    charge: int = 0
    isotope: int | None = None
    explicit_h: int | None = None  # bracket-specified H count; None = fill by valence
    position: int | None = None  # source position, for error reports


@dataclass
class BondDraft:
    a: int
    b: int
    order: BondOrder | None = None  # None = unmarked in the input
    # Directional mark for stereo: +1 when the bond was written "/" in
    # a->b orientation, -1 for "\", 0 when unmarked.
    direction: int = 0


# Aromatic atoms of these elements contribute one pi electron through a
# ring double bond; O and S instead donate a lone pair and keep their
# sigma valence.
_PI_BOND_ELEMENTS = frozenset({"C", "N", "P", "B"})


def _fill_hydrogens(draft: AtomDraft, bond_orders: list[BondOrder]) -> int:
    if draft.aromatic:
        # Aromatic bonds count one sigma unit; pi participation adds one.
        units = sum(1.0 if o is BondOrder.AROMATIC else o.valence_units for o in bond_orders)
        if draft.element in _PI_BOND_ELEMENTS:
            units += 1.0
    else:
        units = sum(o.valence_units for o in bond_orders)
    valences = default_valences(draft.element)

    if draft.explicit_h is not None:
        cap = (max(valences) if valences else 8) + abs(draft.charge)
        if units + draft.explicit_h > cap:
            raise ValenceError(
                f"{draft.element} with {draft.explicit_h}H and bond order sum "
                f"{units:g} exceeds valence {cap}"
            )
        return draft.explicit_h

    if not valences:
        raise UnsupportedElementError(
            f"element {draft.element!r} requires an explicit bracket atom"
        )
    for v in valences:
        if v >= units:
            return max(0, int(v - units))
    raise ValenceError(
        f"{draft.element} has bond order sum {units:g}, exceeding valence {max(valences)}"
    )


def _alternating_kekule(ring: tuple[int, ...], order_of: dict[tuple[int, int], BondOrder]) -> bool:
    """True when ring bond orders alternate single/double around the cycle."""
    if len(ring) % 2:
        return False
    orders = []
    for i, a in enumerate(ring):
        b = ring[(i + 1) % len(ring)]
        orders.append(order_of[(min(a, b), max(a, b))])
    if any(o not in (BondOrder.SINGLE, BondOrder.DOUBLE) for o in orders):
        return False
    for i, o in enumerate(orders):
        if o == orders[(i + 1) % len(orders)]:
            return False
    return True


def _resolve_stereo(
    bonds: list[BondDraft],
    orders: list[BondOrder],
    adjacency: dict[int, list[int]],
) -> list[BondStereo]:
    # f(u -> v) = direction means v sits "up" (+1) or "down" (-1) of u.
    f: dict[tuple[int, int], int] = {}
    for bd in bonds:
        if bd.direction:
            f[(bd.a, bd.b)] = bd.direction
            f[(bd.b, bd.a)] = -bd.direction

    def side(center: int, partner: int) -> int | None:
        """Geometric side of the marked substituent relative to the center."""
        marks = []
        for nbr in adjacency[center]:
            if nbr == partner:
                continue
            d = f.get((center, nbr))
            if d is not None:
                marks.append((nbr, d))
        if not marks:
            return None
        if len(marks) == 2 and marks[0][1] == marks[1][1]:
            raise SmilesParseError(
                f"conflicting stereo marks around atom {center}"
            )
        marks.sort()
        return marks[0][1]

    stereos = []
    for i, bd in enumerate(bonds):
        if orders[i] is not BondOrder.DOUBLE:
            stereos.append(BondStereo.NONE)
            continue
        if len(adjacency[bd.a]) < 2 or len(adjacency[bd.b]) < 2:
            stereos.append(BondStereo.NONE)  # terminal double bond
            continue
        sa = side(bd.a, bd.b)
        sb = side(bd.b, bd.a)
        if sa is None or sb is None:
            stereos.append(BondStereo.UNSPECIFIED)
        elif sa == sb:
            stereos.append(BondStereo.CIS)
        else:
            stereos.append(BondStereo.TRANS)
    return stereos


def assemble(atom_drafts: list[AtomDraft], bond_drafts: list[BondDraft]) -> MolecularGraph:
    if not atom_drafts:
        raise SmilesParseError("input contains no atoms")

    for draft in atom_drafts:
        if draft.element not in RECOGNIZED_ELEMENTS:
            raise UnsupportedElementError(
                f"unsupported element symbol {draft.element!r}"
            )
        if draft.aromatic and draft.element.lower() not in AROMATIC_CAPABLE:
            raise SmilesParseError(
                f"element {draft.element} cannot be aromatic", draft.position
            )

    # Unmarked bonds between two aromatic atoms are provisionally aromatic.
    orders: list[BondOrder] = []
    for bd in bond_drafts:
        if bd.order is not None:
            orders.append(bd.order)
        elif atom_drafts[bd.a].aromatic and atom_drafts[bd.b].aromatic:
            orders.append(BondOrder.AROMATIC)
        else:
            orders.append(BondOrder.SINGLE)

    cycles = minimum_cycle_basis(
        len(atom_drafts), [(bd.a, bd.b) for bd in bond_drafts]
    )
    ring_edges: set[tuple[int, int]] = set()
    for cyc in cycles:
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            ring_edges.add((min(a, b), max(a, b)))

    # Aromatic bonds must lie on rings; demote stray ones to single.
    for i, bd in enumerate(bond_drafts):
        key = (min(bd.a, bd.b), max(bd.a, bd.b))
        if orders[i] is BondOrder.AROMATIC and key not in ring_edges:
            orders[i] = BondOrder.SINGLE

    # Kekulé perception: alternating single/double rings with a Hückel
    # 4n+2 count (one pi electron per carbon) become aromatic.
    order_of = {
        (min(bd.a, bd.b), max(bd.a, bd.b)): orders[i]
        for i, bd in enumerate(bond_drafts)
    }
    to_aromatic_atoms: set[int] = set()
    to_aromatic_edges: set[tuple[int, int]] = set()
    for cyc in cycles:
        if any(atom_drafts[a].element != "C" for a in cyc):
            continue
        if (len(cyc) - 2) % 4 != 0:
            continue
        if _alternating_kekule(cyc, order_of):
            to_aromatic_atoms.update(cyc)
            for i, a in enumerate(cyc):
                b = cyc[(i + 1) % len(cyc)]
                to_aromatic_edges.add((min(a, b), max(a, b)))
    for a in to_aromatic_atoms:
        atom_drafts[a].aromatic = True
    for i, bd in enumerate(bond_drafts):
        key = (min(bd.a, bd.b), max(bd.a, bd.b))
        if key in to_aromatic_edges:
            orders[i] = BondOrder.AROMATIC

    # Every lowercase/flagged atom must end up with an aromatic ring bond.
    incident_aromatic = [False] * len(atom_drafts)
    for i, bd in enumerate(bond_drafts):
        if orders[i] is BondOrder.AROMATIC:
            incident_aromatic[bd.a] = True
            incident_aromatic[bd.b] = True
    for idx, draft in enumerate(atom_drafts):
        if draft.aromatic and not incident_aromatic[idx]:
            raise SmilesParseError(
                f"aromatic atom {draft.element!r} outside any aromatic ring",
                draft.position,
            )

    adjacency: dict[int, list[int]] = {i: [] for i in range(len(atom_drafts))}
    incident_orders: dict[int, list[BondOrder]] = {i: [] for i in range(len(atom_drafts))}
    seen_edges: set[tuple[int, int]] = set()
    for i, bd in enumerate(bond_drafts):
        key = (min(bd.a, bd.b), max(bd.a, bd.b))
        if key in seen_edges:
            raise SmilesParseError(f"duplicate bond between atoms {bd.a} and {bd.b}")
        seen_edges.add(key)
        adjacency[bd.a].append(bd.b)
        adjacency[bd.b].append(bd.a)
        incident_orders[bd.a].append(orders[i])
        incident_orders[bd.b].append(orders[i])

    hydrogens = [
        _fill_hydrogens(draft, incident_orders[i])
        for i, draft in enumerate(atom_drafts)
    ]
    stereos = _resolve_stereo(bond_drafts, orders, adjacency)

    atoms = tuple(
        Atom(
            index=i,
            element=d.element,
            aromatic=d.aromatic,
            implicit_hydrogens=hydrogens[i],
            charge=d.charge,
            isotope=d.isotope,
        )
        for i, d in enumerate(atom_drafts)
    )
    bonds = tuple(
        Bond(endpoints=(bd.a, bd.b), order=orders[i], stereo=stereos[i])
        for i, bd in enumerate(bond_drafts)
    )
    rings = tuple(Ring(tuple(c)) for c in cycles)
    mol = MolecularGraph(atoms=atoms, bonds=bonds, rings=rings)
    mol.validate_connected()
    return mol
