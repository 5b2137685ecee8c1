import json

import pytest
from fastapi.testclient import TestClient

from thermobase.data import bundled_compounds_path
from thermobase.service import ServiceConfig, create_app
from thermobase.store import Store

ADMIN = {"X-Admin-Token": "test-token"}


@pytest.fixture(scope="module")
def client():
    store = Store(data_dir=None)
    rows = [json.loads(l) for l in bundled_compounds_path().read_text().splitlines() if l.strip()]
    report = store.ingest(rows, dataset_id="service-tests")
    assert not report.rejected
    app = create_app(ServiceConfig(admin_token="test-token"), store=store)
    return TestClient(app)


@pytest.fixture(scope="module")
def tokenless_client():
    app = create_app(ServiceConfig(), store=Store(data_dir=None))
    return TestClient(app)


class TestCompounds:
    def test_detail_panel_record(self, client):
        r = client.get("/api/compounds/C001332")
        assert r.status_code == 200
        d = r.json()
        assert d["name"] == "3,4-Dihydroxy-3-cyclobutene-1,2-dione"
        assert d["casrn"] == "2892-51-5"
        assert d["formula"] == "C4H2O4"
        assert d["class"].startswith("02 -")
        kinds = {t["kind"]: t for t in d["thermo"]}
        assert kinds["formation_crystal"]["value"] == -596.2
        assert kinds["sublimation"]["value"] == 83.7
        assert d["consistency"] and d["consistency"][0]["consistent"]

    def test_unknown_id_404(self, client):
        r = client.get("/api/compounds/C999999")
        assert r.status_code == 404
        assert r.json()["error"]["code"] == "unknown_compound"


class TestQuickSearch:
    def test_autodetect_casrn(self, client):
        r = client.get("/api/search", params={"q": "2892-51-5"})
        assert r.json()["mode"] == "casrn"
        assert r.json()["hits"][0]["molecular_id"] == "C001332"

    def test_autodetect_id(self, client):
        r = client.get("/api/search", params={"q": "C001598"})
        assert r.json()["mode"] == "molecular_id"

    def test_autodetect_formula(self, client):
        r = client.get("/api/search", params={"q": "H4C"})
        d = r.json()
        assert d["mode"] == "formula"
        assert d["hits"][0]["name"] == "Methane"

    def test_autodetect_name(self, client):
        r = client.get("/api/search", params={"q": "dihydroxycyclobutenedion"})
        d = r.json()
        assert d["mode"] == "name"
        assert d["hits"][0]["molecular_id"] == "C001332"

    def test_invalid_casrn_shape_warns(self, client):
        r = client.get("/api/search", params={"q": "1234567-89-0"})
        d = r.json()
        assert d["count"] == 0
        assert "check-digit" in (d["warning"] or "")

    def test_empty_query_400(self, client):
        r = client.get("/api/search", params={"q": " "})
        assert r.status_code == 400


class TestStructureSearch:
    def test_similarity_endpoint(self, client):
        r = client.post(
            "/api/search/structure",
            json={"smiles": "CCC1CCCCC1", "threshold_percent": 80},
        )
        assert r.status_code == 200
        assert r.json()["count"] >= 1

    def test_identical_via_renumbered_notation(self, client):
        r = client.post(
            "/api/search/structure",
            json={"smiles": "C2CCCCC2", "threshold_percent": 100},
        )
        hits = r.json()["hits"]
        assert len(hits) == 1 and hits[0]["name"] == "Cyclohexane"

    def test_bad_threshold_400(self, client):
        r = client.post(
            "/api/search/structure",
            json={"smiles": "C1CCCCC1", "threshold_percent": 72},
        )
        assert r.status_code == 400

    def test_substructure_endpoint(self, client):
        r = client.post("/api/search/substructure", json={"smiles": "c1ccccc1"})
        names = {h["name"] for h in r.json()["hits"]}
        assert "Benzene" in names and "Toluene" in names
        assert "Cyclohexane" not in names

    def test_parse_error_400(self, client):
        r = client.post("/api/search/substructure", json={"smiles": "C1CC("})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "parse_error"


class TestAdvancedSearch:
    def test_figure_filters(self, client):
        r = client.post(
            "/api/search/advanced",
            json={
                "characteristics": ["alcohol"],
                "class": "02 - Ring Systems Containing Only Isolated Non-Benzenoid Rings",
            },
        )
        ids = [h["molecular_id"] for h in r.json()["hits"]]
        assert ids == ["C001290", "C001332", "C001358", "C001359"]

    def test_weight_exact(self, client):
        r = client.post("/api/search/advanced", json={"weight": 112.21})
        assert {h["molecular_id"] for h in r.json()["hits"]} >= {"C001598", "C001608"}

    def test_empty_filters_400(self, client):
        r = client.post("/api/search/advanced", json={})
        assert r.status_code == 400


class TestPredict:
    def test_figure_four_table(self, client):
        r = client.post("/api/predict", json={"smiles": "CCC1CCCCC1"})
        assert r.status_code == 200
        d = r.json()
        rows = {x["code"]: x["frequency"] for x in d["feature_rows"]}
        assert rows == {
            "C1C2": 1, "C2C2": 4, "C2C3": 3,
            "C1H": 3, "C2H": 12, "C3H": 1,
            "ZS6C2": 5, "ZS6C3": 1,
        }
        assert all(x["description"] for x in d["feature_rows"])
        est = {e["phase"]: e["value"] for e in d["estimates"]}
        assert est["gas"] == pytest.approx(-172.3, abs=3.0)
        assert est["liquid"] == pytest.approx(-212.8, abs=3.0)
        exp = {t["kind"]: t["value"] for t in d["experimental"]}
        assert exp["formation_gas"] == -171.5
        assert exp["formation_liquid"] == -212.1
        assert d["name"] == "Ethylcyclohexane"
        isomer_names = {h["name"] for h in d["isomers"]}
        assert {"Ethylcyclohexane", "1,1-Dimethylcyclohexane", "Cyclooctane"} <= isomer_names

    def test_out_of_domain_non_hydrocarbon(self, client):
        r = client.post("/api/predict", json={"smiles": "CCO"})
        assert r.status_code == 422
        err = r.json()["error"]
        assert err["code"] == "out_of_domain"
        assert any("non-hydrocarbon" in reason for reason in err["reasons"])

    def test_out_of_domain_fused(self, client):
        r = client.post("/api/predict", json={"smiles": "c1ccc2ccccc2c1"})
        assert r.status_code == 422
        assert any("fused-ring" in reason for reason in r.json()["error"]["reasons"])

    def test_name_input_resolved_locally(self, client):
        r = client.post("/api/predict", json={"name": "Ethylcyclohexane"})
        assert r.status_code == 200
        assert r.json()["smiles"] == "CCC1CCCCC1"

    def test_unknown_name_404(self, client):
        r = client.post("/api/predict", json={"name": "unobtainium"})
        assert r.status_code == 404

    def test_parse_error_400(self, client):
        r = client.post("/api/predict", json={"smiles": "C1CC("})
        assert r.status_code == 400

    def test_experimental_absent_for_unknown_structure(self, client):
        r = client.post("/api/predict", json={"smiles": "CCCCC1CCCCC1"})
        d = r.json()
        assert d["experimental"] is None
        assert d["name"] is None

    def test_feature_rows_match_module_output(self, client):
        from thermobase.chem import parse_smiles
        from thermobase.elba import extract_features

        r = client.post("/api/predict", json={"smiles": "CC(C)(C)c1ccc(C)cc1"})
        api_counts = r.json()["features"]
        module_counts = extract_features(parse_smiles("CC(C)(C)c1ccc(C)cc1")).as_dict()
        assert api_counts == module_counts


class TestSubmissionsFlow:
    def test_full_cycle(self, client):
        r = client.post(
            "/api/submissions",
            json={"submitter": "ana", "name": "Cyclononane", "smiles": "C1CCCCCCCC1"},
        )
        assert r.status_code == 201
        sid = r.json()["submission_id"]
        assert r.json()["status"] == "pending"

        # invisible to search while pending
        r = client.get("/api/search", params={"q": "Cyclononane"})
        assert r.json()["count"] == 0

        r = client.get("/api/admin/pending", headers=ADMIN)
        assert any(s["submission_id"] == sid for s in r.json())

        r = client.post(f"/api/admin/pending/{sid}/approve", headers=ADMIN,
                        json={"note": "checked"})
        assert r.status_code == 200
        new_id = r.json()["assigned_id"]
        assert new_id

        r = client.get("/api/search", params={"q": "Cyclononane"})
        assert r.json()["count"] == 1

        # double decision conflicts
        r = client.post(f"/api/admin/pending/{sid}/approve", headers=ADMIN)
        assert r.status_code == 409

    def test_reject_with_note(self, client):
        r = client.post(
            "/api/submissions",
            json={"submitter": "rui", "name": "Cyclodecane", "smiles": "C1CCCCCCCCC1"},
        )
        sid = r.json()["submission_id"]
        r = client.post(f"/api/admin/pending/{sid}/reject", headers=ADMIN,
                        json={"note": "no reference given"})
        assert r.json()["status"] == "rejected"
        assert r.json()["reviewer_note"] == "no reference given"

    def test_precheck_failure_400(self, client):
        r = client.post(
            "/api/submissions",
            json={"submitter": "ana", "name": "Broken", "smiles": "C1CC("},
        )
        assert r.status_code == 400

    def test_admin_requires_token(self, client):
        assert client.get("/api/admin/pending").status_code == 401
        bad = {"X-Admin-Token": "wrong"}
        assert client.get("/api/admin/pending", headers=bad).status_code == 401

    def test_admin_inert_without_configured_token(self, tokenless_client):
        r = tokenless_client.get("/api/admin/pending",
                                 headers={"X-Admin-Token": "anything"})
        assert r.status_code == 401
        assert r.json()["error"]["code"] == "admin_disabled"


class TestStats:
    def test_counts(self, client):
        r = client.get("/api/stats")
        d = r.json()
        assert d["compounds"] >= 72
        assert d["formation"]["gas"] >= 70
        assert d["phase_change"]["vaporization"] >= 50

    def test_health(self, client):
        d = client.get("/api/health").json()
        assert d["status"] == "ok"
        assert set(d["phases_fitted"]) == {"gas", "liquid"}
