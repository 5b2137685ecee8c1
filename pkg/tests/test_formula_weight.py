import random

import pytest

from thermobase.chem import molecular_formula, molecular_weight, parse_smiles
from thermobase.chem.elements import ATOMIC_WEIGHTS

from conftest import shuffled


class TestFormula:
    @pytest.mark.parametrize(
        "smiles,expected",
        [
            ("CCC1CCCCC1", "C8H16"),
            ("OC1=C(O)C(=O)C1=O", "C4H2O4"),
            ("C", "CH4"),
            ("CCO", "C2H6O"),
            ("ClC(Cl)(Cl)Cl", "CCl4"),
            ("FC(F)(Cl)Br", "CBrClF2"),  # halogens alphabetical after H
            ("C#N", "CHN"),
            ("CS", "CH4S"),
        ],
    )
    def test_rendering_chxnos_order(self, smiles, expected):
        assert str(molecular_formula(parse_smiles(smiles))) == expected

    def test_counts_include_implicit_hydrogens(self):
        f = molecular_formula(parse_smiles("C1CCCCC1"))
        assert f.element_counts == {"C": 6, "H": 12}


class TestWeight:
    @pytest.mark.parametrize(
        "smiles,expected",
        [
            ("CCC1CCCCC1", 112.21),   # paper detail panel value
            ("OC1=C(O)C(=O)C1=O", 114.06),
            ("C", 16.04),
        ],
    )
    def test_reference_weights(self, smiles, expected):
        assert molecular_weight(parse_smiles(smiles)) == pytest.approx(expected, abs=0.01)

    def test_methane_from_bundled_table(self):
        # independent hand sum over the bundled atomic-weight entries
        expected = ATOMIC_WEIGHTS["C"] + 4 * ATOMIC_WEIGHTS["H"]
        assert molecular_weight(parse_smiles("C")) == pytest.approx(expected, abs=1e-9)

    def test_permutation_invariance(self, fixture_smiles):
        rng = random.Random(11)
        for smi in fixture_smiles[:25]:
            mol = parse_smiles(smi)
            ref = molecular_weight(mol)
            assert molecular_weight(shuffled(mol, rng)) == pytest.approx(ref, abs=1e-9)

    def test_additivity_over_atoms(self):
        # weight equals the sum over atoms of element weight plus H weight
        mol = parse_smiles("CC(C)c1ccccc1")
        total = sum(
            ATOMIC_WEIGHTS[a.element] + a.implicit_hydrogens * ATOMIC_WEIGHTS["H"]
            for a in mol.atoms
        )
        assert molecular_weight(mol) == pytest.approx(total, abs=1e-12)
