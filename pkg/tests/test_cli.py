import json

import pytest
from click.testing import CliRunner

from thermobase.cli import main


@pytest.fixture(scope="module")
def data_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("clistore")
    runner = CliRunner()
    result = runner.invoke(main, ["ingest", "--bundled", "--data", str(d)])
    assert result.exit_code == 0, result.output
    assert "accepted 72" in result.output
    return d


def run(*args):
    return CliRunner().invoke(main, list(args))


class TestValidateCasrn:
    def test_valid_exit_zero(self):
        result = run("validate-casrn", "67-56-1")
        assert result.exit_code == 0
        assert result.output.strip() == "valid"

    def test_invalid_exit_one(self):
        result = run("validate-casrn", "67-56-2")
        assert result.exit_code == 1
        assert result.output.strip() == "invalid"


class TestSearch:
    def test_formula_mode(self, data_dir):
        result = run("search", "formula", "C?H11", "--data", str(data_dir))
        assert result.exit_code == 0
        assert "Pentyl" in result.output

    def test_quick_mode_json(self, data_dir):
        result = run("search", "quick", "2892-51-5", "--data", str(data_dir), "--json")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["mode"] == "casrn"
        assert payload["hits"][0]["molecular_id"] == "C001332"

    def test_similarity_mode(self, data_dir):
        result = run("search", "similarity", "CCC1CCCCC1", "--threshold", "80",
                     "--data", str(data_dir))
        assert result.exit_code == 0
        assert "sim=" in result.output

    def test_unknown_mode_usage_error(self, data_dir):
        result = run("search", "fuzzy", "x", "--data", str(data_dir))
        assert result.exit_code == 2

    def test_parse_error_exit_one(self, data_dir):
        result = run("search", "substructure", "C1CC(", "--data", str(data_dir))
        assert result.exit_code == 1
        assert "error:" in result.output


class TestPredict:
    def test_json_output(self, data_dir):
        result = run("predict", "CCC1CCCCC1", "--phase", "gas", "--json",
                     "--data", str(data_dir))
        assert result.exit_code == 0, result.output
        payload = json.loads(result.output)
        assert payload["canonical_smiles"] == "CCC1CCCCC1"
        assert {r["code"] for r in payload["feature_rows"]} == {
            "C1C2", "C2C2", "C2C3", "C1H", "C2H", "C3H", "ZS6C2", "ZS6C3",
        }
        est = {e["phase"]: e["value"] for e in payload["estimates"]}
        assert est["gas"] == pytest.approx(-172.3, abs=3.0)
        assert "liquid" not in est

    def test_out_of_domain_exit_one(self, data_dir):
        result = run("predict", "CCO", "--data", str(data_dir))
        assert result.exit_code == 1
        assert "non-hydrocarbon" in result.output

    def test_name_flag(self, data_dir):
        result = run("predict", "Ethylcyclohexane", "--name", "--data", str(data_dir))
        assert result.exit_code == 0
        assert "CCC1CCCCC1" in result.output

    def test_trans_ring_hint(self, data_dir):
        result = run("predict", "C1CCCC=CCC1", "--trans-ring", "1", "--json",
                     "--data", str(data_dir))
        payload = json.loads(result.output)
        assert payload["features"].get("TRANSRING8") == 1


class TestFitCommand:
    def test_fit_writes_table(self, tmp_path):
        from thermobase.data import bundled_compounds_path

        dataset = tmp_path / "train.jsonl"
        dataset.write_text(bundled_compounds_path().read_text())
        out = tmp_path / "gas.json"
        result = run("fit", str(dataset), "--phase", "gas", "--out", str(out))
        assert result.exit_code == 0, result.output
        table = json.loads(out.read_text())
        assert table["phase"] == "gas"
        assert "C2H" in table["entries"]
        assert table["provenance"]["mad_kj_mol"] < 5.0

    def test_missing_phase_usage_error(self, tmp_path):
        f = tmp_path / "x.jsonl"
        f.write_text("")
        assert run("fit", str(f), "--out", "t.json").exit_code == 2


class TestStatsAuditShow:
    def test_stats(self, data_dir):
        result = run("stats", "--data", str(data_dir))
        assert result.exit_code == 0
        assert "compounds:   72" in result.output

    def test_stats_json(self, data_dir):
        payload = json.loads(run("stats", "--data", str(data_dir), "--json").output)
        assert payload["compounds"] == 72

    def test_audit_clean(self, data_dir):
        result = run("audit", "--data", str(data_dir))
        assert result.exit_code == 0
        assert "audit clean" in result.output

    def test_show(self, data_dir):
        result = run("show", "C001332", "--data", str(data_dir))
        assert result.exit_code == 0
        assert "2892-51-5" in result.output


class TestIngest:
    def test_rejects_reported(self, tmp_path):
        bad = tmp_path / "bad.jsonl"
        bad.write_text(
            json.dumps({"name": "Good", "smiles": "CCCCCC"}) + "\n"
            + json.dumps({"name": "Bad", "smiles": "CCO", "formula": "C2H4O"}) + "\n"
        )
        result = run("ingest", str(bad), "--data", str(tmp_path / "store"))
        assert result.exit_code == 0
        assert "accepted 1 of 2" in result.output
        assert "formula mismatch" in result.output

    def test_requires_source(self):
        assert run("ingest").exit_code == 2
