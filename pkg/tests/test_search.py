import itertools
import random

import pytest

from thermobase.search import (
    ALLOWED_THRESHOLDS,
    AdvancedFilters,
    SearchEngine,
    SearchError,
    derive_characteristics,
    parse_formula_pattern,
    soundex,
)

from conftest import parse


@pytest.fixture(scope="module")
def engine(fixture_store):
    return SearchEngine(fixture_store)


class TestSoundex:
    @pytest.mark.parametrize(
        "name,code",
        [
            ("benzene", "B525"),
            ("benzeen", "B525"),
            ("Robert", "R163"),
            ("Rupert", "R163"),
            ("Tymczak", "T522"),
            ("Ashcraft", "A261"),  # h/w transparency
            ("Pfister", "P236"),
            ("Honeyman", "H555"),
        ],
    )
    def test_classic_codes(self, name, code):
        assert soundex(name) == code

    def test_no_letters(self):
        assert soundex("12345") == ""


class TestNameSearch:
    def test_squaric_synonym_ranks_first(self, engine):
        hits = engine.search_name("dihydroxycyclobutenedion")
        assert hits
        assert hits[0].molecular_id == "C001332"
        assert hits[0].match_index == 0

    def test_ordering_by_match_position_then_length(self, engine):
        hits = engine.search_name("cyclohexane")
        # exact-start matches ("Cyclohexane", "Cyclohexene"...) precede
        # embedded matches ("Methylcyclohexane", "Ethylcyclohexane")
        assert hits[0].matched_name == "Cyclohexane"
        positions = [h.match_index for h in hits]
        assert positions == sorted(positions)

    def test_phonetic_fallback(self, engine):
        hits = engine.search_name("benzeen")
        assert hits
        assert all(h.phonetic for h in hits)
        assert any(h.record.name == "Benzene" for h in hits)

    def test_fallback_only_without_substring_hits(self, engine):
        hits = engine.search_name("benzene")
        assert hits
        assert not any(h.phonetic for h in hits)

    def test_garbage_is_empty(self, engine):
        assert engine.search_name("zzzzqq") == []

    def test_empty_query_rejected(self, engine):
        with pytest.raises(SearchError):
            engine.search_name("   ")


class TestFormulaSearch:
    def test_pattern_parsing(self):
        assert parse_formula_pattern("C?H11") == {"C": None, "H": 11}
        assert parse_formula_pattern("H4C") == {"H": 4, "C": 1}
        assert parse_formula_pattern("CH4") == {"C": 1, "H": 4}

    def test_bad_patterns(self):
        for bad in ("", "1C", "C4H?x", "c6h6", "C6C6"):
            with pytest.raises(SearchError):
                parse_formula_pattern(bad)

    def test_any_order(self, engine):
        a = engine.search_formula("H4C")
        b = engine.search_formula("CH4")
        assert [h.molecular_id for h in a] == [h.molecular_id for h in b]
        assert a and a[0].record.name == "Methane"

    def test_wildcard_count(self, engine):
        hits = engine.search_formula("C?H11")
        assert [h.record.formula for h in hits] == ["C5H11"]

    def test_exact_element_set(self, engine):
        # pattern lists only C and H: oxygen compounds never match
        for h in engine.search_formula("C?H?"):
            assert set(parse(h.record.smiles).atoms[0].element) <= {"C"}

    def test_c8h16_hits_both_fixtures(self, engine):
        ids = {h.molecular_id for h in engine.search_formula("C8H16")}
        assert {"C001598", "C001608"} <= ids


class TestLookup:
    def test_molecular_id(self, engine):
        hits, warning = engine.lookup("C001332")
        assert warning is None
        assert len(hits) == 1
        assert hits[0].record.casrn == "2892-51-5"

    def test_casrn(self, engine):
        hits, warning = engine.lookup("2892-51-5")
        assert warning is None
        assert hits[0].molecular_id == "C001332"

    def test_invalid_casrn_warns(self, engine):
        hits, warning = engine.lookup("0000000-00-0")
        assert hits == []
        assert warning and "check-digit" in warning

    def test_unknown_id_empty(self, engine):
        hits, warning = engine.lookup("C999999")
        assert hits == [] and warning is None


class TestSimilarity:
    def test_identical_structures_by_canonical_form(self, engine):
        hits = engine.search_similarity("C2CCCCC2", 1.00)
        assert len(hits) == 1
        assert hits[0].record.name == "Cyclohexane"

    def test_threshold_validation(self, engine):
        with pytest.raises(SearchError):
            engine.search_similarity("C1CCCCC1", 0.65)

    def test_identity_scores_one(self, engine):
        hits = engine.search_similarity("CCC1CCCCC1", 0.95)
        me = [h for h in hits if h.molecular_id == "C001598"]
        assert me and me[0].similarity == 1.0

    def test_ordering(self, engine):
        hits = engine.search_similarity("CCC1CCCCC1", 0.70)
        keys = [(-h.similarity, h.mw_delta, h.molecular_id) for h in hits]
        assert keys == sorted(keys)

    def test_threshold_monotonicity_fixture_queries(self, engine, fixture_smiles):
        rng = random.Random(17)
        queries = rng.sample(fixture_smiles, 12)
        for q in queries:
            previous: set[str] | None = None
            for t in sorted(ALLOWED_THRESHOLDS, reverse=True):
                ids = {h.molecular_id for h in engine.search_similarity(q, t)}
                if previous is not None:
                    assert previous <= ids, (q, t)
                previous = ids


class BruteForceEmbedding:
    """Exhaustive product-enumeration oracle, independent of the engine."""

    @staticmethod
    def exists(query, target) -> bool:
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


class TestSubstructure:
    def test_cyclohexane_query(self, engine):
        ids = {h.molecular_id for h in engine.search_substructure("C1CCCCC1")}
        names = {engine._store.get(i).name for i in ids}
        assert {"Ethylcyclohexane", "Bicyclohexyl", "Cyclohexane"} <= names

    def test_benzene_query_skips_saturated_rings(self, engine):
        names = {
            h.record.name for h in engine.search_substructure("c1ccccc1")
        }
        assert "1-tert-Butyl-4-methylbenzene" in names
        assert "Cyclohexane" not in names

    def test_reflexivity(self, engine):
        hits = engine.search_substructure("OC1=C(O)C(=O)C1=O")
        assert any(h.molecular_id == "C001332" for h in hits)

    def test_hits_confirmed_by_brute_force_oracle(self, engine):
        for query_smiles in ("C1CCCCC1", "c1ccccc1", "CC(C)C", "C=CC"):
            query = parse(query_smiles)
            hits = engine.search_substructure(query_smiles)
            for h in hits:
                target = parse(h.record.smiles)
                if len(target.atoms) <= 12:
                    assert BruteForceEmbedding.exists(query, target), (
                        query_smiles, h.record.name,
                    )

    def test_no_false_negatives_versus_oracle(self, engine, fixture_store):
        # on small targets the engine must find exactly what the oracle finds
        query = parse("CC(C)C")
        got = {h.molecular_id for h in engine.search_substructure("CC(C)C")}
        for rec in fixture_store.records:
            target = parse(rec.smiles)
            if len(target.atoms) <= 10:
                expected = BruteForceEmbedding.exists(query, target)
                assert (rec.molecular_id in got) == expected, rec.name


class TestAdvanced:
    def test_figure_class_and_characteristic(self, engine):
        hits = engine.search_advanced(
            AdvancedFilters(
                characteristics=("alcohol",),
                compound_class="02 - Ring Systems Containing Only Isolated Non-Benzenoid Rings",
            )
        )
        assert [h.molecular_id for h in hits] == [
            "C001290", "C001332", "C001358", "C001359",
        ]

    def test_mw_range_both_c8h16(self, engine):
        hits = engine.search_advanced(
            AdvancedFilters(weight_min=112.0, weight_max=112.5)
        )
        ids = {h.molecular_id for h in hits}
        assert {"C001598", "C001608"} <= ids  # the two detail-panel isomers
        assert all(h.record.formula == "C8H16" for h in hits)

    def test_conjunction_can_be_empty(self, engine):
        hits = engine.search_advanced(
            AdvancedFilters(physical_state="gas", characteristics=("polymer",))
        )
        assert hits == []

    def test_empty_filters_rejected(self, engine):
        with pytest.raises(SearchError):
            engine.search_advanced(AdvancedFilters())

    def test_state_filter(self, engine):
        hits = engine.search_advanced(AdvancedFilters(physical_state="crystal"))
        names = {h.record.name for h in hits}
        assert "Naphthalene" in names
        assert "3,4-Dihydroxy-3-cyclobutene-1,2-dione" in names


class TestQuickDispatch:
    @pytest.mark.parametrize(
        "q,mode",
        [
            ("2892-51-5", "casrn"),
            ("C001332", "molecular_id"),
            ("C6H6", "formula"),
            ("H4C", "formula"),
            ("benzene", "name"),
            ("Squaric acid", "name"),
        ],
    )
    def test_detection(self, engine, q, mode):
        got_mode, hits, _ = engine.quick_search(q)
        assert got_mode == mode
        assert hits

    def test_ranking_ties_broken_by_id(self, engine):
        _, hits, _ = engine.quick_search("methyl")
        keys = [(h.match_index, len(h.matched_name), h.molecular_id) for h in hits]
        assert keys == sorted(keys)


class TestCharacteristics:
    @pytest.mark.parametrize(
        "smiles,expected",
        [
            ("CCO", {"alcohol"}),
            ("OC1=C(O)C(=O)C1=O", {"alcohol", "ketone", "alkene"}),
            ("CCC1CCCCC1", {"alkane"}),
            ("CCOCC", {"ether"}),
            ("CC(=O)O", {"carboxylic acid"}),
            ("CC(=O)OC", {"ester"}),
            ("CC=O", {"aldehyde"}),
            ("CC#N", {"nitrile/isonitrile"}),
            ("CCN", {"amine"}),
            ("CCS", {"thiol"}),
            ("CSC", {"thioether"}),
            ("CCl", {"halogen"}),
            ("Cc1ccccc1", {"arene"}),
            ("CC#C", {"alkyne"}),
        ],
    )
    def test_core_patterns(self, smiles, expected):
        assert derive_characteristics(parse(smiles)) == expected
