import json
import random

import pytest

from thermobase.chem import parse_smiles
from thermobase.chem.graph import Atom, Bond, MolecularGraph, Ring
from thermobase.data import bundled_compounds_path
from thermobase.records import CompoundRecord
from thermobase.store import Store


def permute_graph(mol: MolecularGraph, perm: list[int]) -> MolecularGraph:
    """Relabel atoms: new index of old atom i is perm[i]."""
    atoms = tuple(
        Atom(
            index=perm[a.index],
            element=a.element,
            aromatic=a.aromatic,
            implicit_hydrogens=a.implicit_hydrogens,
            charge=a.charge,
            isotope=a.isotope,
        )
        for a in sorted(mol.atoms, key=lambda x: perm[x.index])
    )
    bonds = tuple(
        Bond(endpoints=(perm[b.endpoints[0]], perm[b.endpoints[1]]),
             order=b.order, stereo=b.stereo)
        for b in mol.bonds
    )
    rings = tuple(Ring(tuple(perm[i] for i in r.atoms)) for r in mol.rings)
    return MolecularGraph(atoms=atoms, bonds=bonds, rings=rings)


def shuffled(mol: MolecularGraph, rng: random.Random) -> MolecularGraph:
    perm = list(range(len(mol.atoms)))
    rng.shuffle(perm)
    return permute_graph(mol, perm)


@pytest.fixture(scope="session")
def bundled_rows() -> list[dict]:
    rows = []
    for line in bundled_compounds_path().read_text().splitlines():
        if line.strip():
            rows.append(json.loads(line))
    return rows


@pytest.fixture(scope="session")
def bundled_records(bundled_rows) -> list[CompoundRecord]:
    return [CompoundRecord.from_json(r) for r in bundled_rows]


@pytest.fixture(scope="session")
def fixture_store(bundled_rows) -> Store:
    """In-memory store loaded with the bundled dataset."""
    store = Store(data_dir=None)
    report = store.ingest(list(bundled_rows), dataset_id="test-fixtures")
    assert not report.rejected, report.rejected
    return store


@pytest.fixture(scope="session")
def fixture_smiles(bundled_records) -> list[str]:
    return [r.smiles for r in bundled_records]


def parse(smi: str):
    return parse_smiles(smi)
