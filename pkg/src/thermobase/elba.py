"""Bond-additivity descriptor extraction for hydrocarbons.

Each atom of an in-domain molecule gets a class label:

* ``C{k}`` sp3 carbon with k carbon neighbors (methane is ``C0``),
* ``A2``/``A3`` aromatic carbon bearing hydrogen / a substituent,
* ``D{k}`` sp2 carbon, k carbon neighbors beyond the double-bond partner,
* ``T{k}`` sp carbon, k carbon neighbors beyond its multiple-bond partners.

The feature vector counts one code per heavy-atom bond (from the two
endpoint labels), one ``{label}H`` code per hydrogen, one ``ZS{n}C{k}``
strain code per sp3 ring carbon, plus ``CIS``, ``ORTHO``, and
``TRANSRING{n}`` correction codes. Codes are internal identifiers
resolved only through a parameter table, so the grammar is extensible.

The domain is restricted to non-polycyclic hydrocarbons: every atom must
be carbon and no two basis rings may share an atom. Ring systems joined
by a plain bond stay in-domain.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from thermobase.chem.graph import BondOrder, BondStereo, MolecularGraph

# Hint-driven trans-in-ring corrections apply to these ring sizes only.
TRANS_RING_SIZES = (8, 12)

_FAMILY_ORDER = {"C": 0, "A": 1, "D": 2, "T": 3}


class ElbaError(ValueError):
    """Base class for descriptor-extraction failures."""


class AtomClassificationError(ElbaError):
    pass


class OutOfDomainError(ElbaError):
    """Molecule outside the supported hydrocarbon domain."""

    def __init__(self, verdict: "DomainVerdict"):
        self.verdict = verdict
        super().__init__("; ".join(verdict.reasons) or "out of domain")


@dataclass(frozen=True)
class DomainVerdict:
    in_domain: bool
    reasons: tuple[str, ...] = ()

    def __post_init__(self):
        assert self.in_domain == (not self.reasons)


@dataclass(frozen=True)
class ElbaFeatureVector:
    """Occurrence counts per descriptor code; zero counts never stored."""

    counts: dict[str, int]

    def __post_init__(self):
        object.__setattr__(
            self, "counts", {c: n for c, n in sorted(self.counts.items()) if n}
        )

    def as_dict(self) -> dict[str, int]:
        return dict(self.counts)

    def codes(self) -> tuple[str, ...]:
        return tuple(self.counts)

    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, code: str) -> int:
        return self.counts.get(code, 0)


def check_domain(mol: MolecularGraph) -> DomainVerdict:
    """Decide whether the additivity scheme covers this molecule."""
    reasons: list[str] = []

    foreign = sorted({a.element for a in mol.atoms if a.element != "C"})
    if foreign:
        reasons.append(f"non-hydrocarbon element: {', '.join(foreign)}")

    shared = _fused_ring_atoms(mol)
    if shared:
        reasons.append(
            f"fused-ring system: basis rings share atoms {sorted(shared)}"
        )

    if not foreign:
        for atom in mol.atoms:
            if atom.charge:
                reasons.append(f"unsupported feature: charged atom {atom.index}")
            elif atom.isotope is not None:
                reasons.append(f"unsupported feature: isotope label on atom {atom.index}")
            elif not _is_tetravalent(mol, atom.index):
                reasons.append(
                    f"unsupported feature: open valence (radical) at atom {atom.index}"
                )

    return DomainVerdict(in_domain=not reasons, reasons=tuple(reasons))


def _fused_ring_atoms(mol: MolecularGraph) -> set[int]:
    shared: set[int] = set()
    rings = mol.rings
    for i in range(len(rings)):
        for j in range(i + 1, len(rings)):
            shared |= set(rings[i].atoms) & set(rings[j].atoms)
    return shared


def _is_tetravalent(mol: MolecularGraph, idx: int) -> bool:
    atom = mol.atoms[idx]
    orders = [mol.bonds[bi].order for _, bi in mol.adjacency[idx]]
    if atom.aromatic:
        # Sigma framework plus one unit for pi participation.
        units = sum(1.0 if o is BondOrder.AROMATIC else o.valence_units for o in orders) + 1.0
    else:
        units = sum(o.valence_units for o in orders)
    return units + atom.implicit_hydrogens == 4.0


def classify_atom(mol: MolecularGraph, atom_index: int) -> str:
    """Class label for one carbon atom."""
    atom = mol.atoms[atom_index]
    if atom.element != "C":
        raise AtomClassificationError(
            f"atom {atom_index} is {atom.element}, not carbon"
        )
    if atom.aromatic:
        return "A2" if atom.implicit_hydrogens > 0 else "A3"

    carbon_neighbors = []
    multiple_partners = []
    double_count = 0
    triple = False
    for nbr, bi in mol.adjacency[atom_index]:
        bond = mol.bonds[bi]
        if mol.atoms[nbr].element == "C":
            carbon_neighbors.append(nbr)
        if bond.order is BondOrder.DOUBLE:
            double_count += 1
            multiple_partners.append(nbr)
        elif bond.order is BondOrder.TRIPLE:
            triple = True
            multiple_partners.append(nbr)

    if triple or double_count >= 2:
        k = len([n for n in carbon_neighbors if n not in multiple_partners])
        return f"T{k}"
    if double_count == 1:
        k = len([n for n in carbon_neighbors if n not in multiple_partners])
        return f"D{k}"
    return f"C{len(carbon_neighbors)}"


def bond_code(label_a: str, label_b: str, order: BondOrder) -> str:
    """Canonically ordered code for a heavy-atom bond.

    Labels sort by family (C before A before D before T), then index.
    A single bond between two unsaturated-family atoms carries an ``S``
    suffix so it never collides with the family's defining bond (e.g.
    the central bond of a conjugated diene vs. the double bond itself).
    """
    x, y = sorted(
        (label_a, label_b), key=lambda s: (_FAMILY_ORDER[s[0]], int(s[1:]))
    )
    suffix = ""
    if order is BondOrder.SINGLE and x[0] != "C" and y[0] != "C":
        suffix = "S"
    return f"{x}{y}{suffix}"


def extract_features(
    mol: MolecularGraph, trans_ring_double_bonds: int = 0
) -> ElbaFeatureVector:
    """Descriptor frequency vector for an in-domain hydrocarbon.

    ``trans_ring_double_bonds`` is a user hint: the number of double
    bonds in trans configuration inside an 8- or 12-membered ring
    (geometry perception from coordinates is out of scope).
    """
    verdict = check_domain(mol)
    if not verdict.in_domain:
        raise OutOfDomainError(verdict)

    labels = [classify_atom(mol, i) for i in range(len(mol.atoms))]
    counts: dict[str, int] = {}

    def bump(code: str, n: int = 1) -> None:
        counts[code] = counts.get(code, 0) + n

    for bond in mol.bonds:
        a, b = bond.endpoints
        bump(bond_code(labels[a], labels[b], bond.order))

    for atom in mol.atoms:
        if atom.implicit_hydrogens:
            bump(f"{labels[atom.index]}H", atom.implicit_hydrogens)

    for ring in mol.rings:
        for a in ring.atoms:
            if labels[a].startswith("C"):
                bump(f"ZS{ring.size}{labels[a]}")

    for bond in mol.bonds:
        if bond.order is BondOrder.DOUBLE and bond.stereo is BondStereo.CIS:
            bump("CIS")
        if bond.order is BondOrder.AROMATIC:
            a, b = bond.endpoints
            if labels[a] == "A3" and labels[b] == "A3":
                bump("ORTHO")

    if trans_ring_double_bonds:
        if trans_ring_double_bonds < 0:
            raise ElbaError("trans_ring_double_bonds must be >= 0")
        sizes = sorted(
            {r.size for r in mol.rings if r.size in TRANS_RING_SIZES}
        )
        if not sizes:
            raise ElbaError(
                "trans-ring hint given but the molecule has no "
                f"{' or '.join(str(s) for s in TRANS_RING_SIZES)}-membered ring"
            )
        if len(sizes) > 1:
            raise ElbaError(
                "trans-ring hint is ambiguous: molecule has rings of sizes "
                f"{sizes}; split the hint per structure"
            )
        bump(f"TRANSRING{sizes[0]}", trans_ring_double_bonds)

    return ElbaFeatureVector(counts)


_CLASS_WORD = {
    "0": "isolated",
    "1": "primary",
    "2": "secondary",
    "3": "tertiary",
    "4": "quaternary",
}

_LABEL_RE = re.compile(r"^([CADT])(\d)$")


def _label_phrase(label: str) -> str:
    m = _LABEL_RE.match(label)
    if not m:
        return label
    family, k = m.groups()
    if family == "C":
        return f"{_CLASS_WORD[k]} sp3 carbon"
    if family == "A":
        return "unsubstituted aromatic carbon" if k == "2" else "substituted aromatic carbon"
    kind = "sp2" if family == "D" else "sp"
    extra = "no" if k == "0" else k
    return f"{kind} carbon with {extra} further carbon neighbor{'s' if k != '1' else ''}"


def describe_code(code: str) -> str:
    """Human-readable short description, derived from the code grammar."""
    m = re.match(r"^ZS(\d+)C(\d)$", code)
    if m:
        size, k = m.groups()
        return (
            f"ring-strain term for a {_CLASS_WORD[k]} sp3 carbon "
            f"in a {size}-membered ring"
        )
    m = re.match(r"^TRANSRING(\d+)$", code)
    if m:
        return (
            f"correction for a double bond in trans configuration "
            f"inside a {m.group(1)}-membered ring"
        )
    if code == "CIS":
        return "correction for a cis-configured carbon-carbon double bond"
    if code == "ORTHO":
        return "correction for an adjacent pair of substituted aromatic carbons"
    m = re.match(r"^([CADT]\d)H$", code)
    if m:
        return f"C-H bond on a {_label_phrase(m.group(1))}"
    m = re.match(r"^([CADT]\d)([CADT]\d)(S?)$", code)
    if m:
        x, y, s = m.groups()
        if s:
            kind = "single bond"
        elif x[0] == "A" and y[0] == "A":
            kind = "aromatic ring bond"
        elif x[0] == "D" and y[0] == "D":
            kind = "double bond"
        elif x[0] == "T" and y[0] == "T":
            kind = "triple bond"
        elif {x[0], y[0]} <= {"D", "T"}:
            kind = "double bond"
        else:
            kind = "single bond"
        return f"{kind} between a {_label_phrase(x)} and a {_label_phrase(y)}"
    return "unrecognized code"
