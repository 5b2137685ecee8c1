import math
import random

import numpy as np
import pytest

from thermobase.elba import ElbaFeatureVector
from thermobase.thermo import (
    ConsistencyFinding,
    MissingParameterError,
    ParameterTable,
    Phase,
    ThermoKind,
    ThermoValue,
    consistency_check,
    estimate,
    fit_parameters,
    implied_value,
)


def fv(**counts):
    return ElbaFeatureVector(dict(counts))


def obs(value, phase=Phase.GAS, unc=None):
    kind = ThermoKind.FORMATION_GAS if phase is Phase.GAS else ThermoKind.FORMATION_LIQUID
    return ThermoValue(kind=kind, value=value, uncertainty=unc)


class TestEstimate:
    def test_dot_product(self):
        table = ParameterTable(phase=Phase.GAS, entries={"A": 10.0, "B": -1.0})
        assert estimate(fv(A=2, B=3), table).value == pytest.approx(17.0)

    def test_empty_vector_is_zero(self):
        table = ParameterTable(phase=Phase.GAS, entries={"A": 10.0})
        assert estimate(fv(), table).value == 0.0

    def test_kind_follows_phase(self):
        table = ParameterTable(phase=Phase.LIQUID, entries={"A": 1.0})
        assert estimate(fv(A=1), table).kind is ThermoKind.FORMATION_LIQUID

    def test_missing_codes_reported(self):
        table = ParameterTable(phase=Phase.GAS, entries={"A": 1.0})
        with pytest.raises(MissingParameterError) as exc:
            estimate(fv(A=1, B=2, C=3), table)
        assert exc.value.missing == ("B", "C")

    def test_linearity(self):
        table = ParameterTable(phase=Phase.GAS, entries={"A": 2.5, "B": -1.5})
        u, v = fv(A=1, B=2), fv(A=3)
        merged = fv(A=1 + 3, B=2)
        assert estimate(merged, table).value == pytest.approx(
            estimate(u, table).value + estimate(v, table).value
        )
        scaled = fv(A=2, B=4)
        assert estimate(scaled, table).value == pytest.approx(2 * estimate(u, table).value)


class TestFit:
    def test_exact_recovery_zero_noise(self):
        rng = np.random.default_rng(42)
        codes = [f"K{i}" for i in range(8)]
        p_true = rng.normal(0, 50, size=len(codes))
        rows = []
        for _ in range(20):
            counts = {c: int(k) for c, k in zip(codes, rng.integers(0, 5, len(codes))) if k}
            rows.append(counts)
        # ensure full rank by adding unit rows
        for c in codes:
            rows.append({c: 1})
        training = [
            (fv(**counts), obs(sum(p_true[codes.index(c)] * n for c, n in counts.items())))
            for counts in rows
        ]
        report = fit_parameters(training, Phase.GAS)
        for i, c in enumerate(codes):
            assert report.fitted.entries[c] == pytest.approx(p_true[i], abs=1e-8)
        assert report.mad < 1e-8

    def test_single_compound_minimum_norm(self):
        # one equation a + 6b = -83.8; the minimum-norm solution is
        # p = A^T (A A^T)^-1 y with A = [1, 6], so a = -83.8/37, b = 6a.
        training = [(fv(C1C1=1, C1H=6), obs(-83.8))]
        report = fit_parameters(training, Phase.GAS)
        a = report.fitted.entries["C1C1"]
        b = report.fitted.entries["C1H"]
        assert a + 6 * b == pytest.approx(-83.8, abs=1e-9)
        assert a == pytest.approx(-83.8 / 37.0, abs=1e-9)
        assert b == pytest.approx(6 * -83.8 / 37.0, abs=1e-9)
        assert report.unidentifiable_codes == ()

    def test_unidentifiable_codes_excluded(self):
        training = [(fv(C1C1=1, C1H=6), obs(-83.8))]
        report = fit_parameters(training, Phase.GAS, requested_codes=["ZS6C3", "C1H"])
        assert report.unidentifiable_codes == ("ZS6C3",)
        assert "ZS6C3" not in report.fitted.entries

    def test_noisy_fit_matches_normal_equations_oracle(self):
        rng = np.random.default_rng(7)
        codes = [f"K{i}" for i in range(6)]
        p_true = rng.normal(0, 30, size=len(codes))
        x = rng.integers(0, 4, size=(18, len(codes))).astype(float)
        x[:6] += np.eye(len(codes)) * 2  # guarantee full column rank
        y = x @ p_true + rng.normal(0, 1.0, size=len(x))
        training = [
            (fv(**{c: int(x[i, j]) for j, c in enumerate(codes) if x[i, j]}), obs(y[i]))
            for i in range(len(x))
        ]
        report = fit_parameters(training, Phase.GAS)
        # independent brute-force normal-equations solve
        p_oracle = np.linalg.solve(x.T @ x, x.T @ y)
        fitted = np.array([report.fitted.entries[c] for c in codes])
        resid_fit = np.linalg.norm(x @ fitted - y)
        resid_oracle = np.linalg.norm(x @ p_oracle - y)
        assert abs(resid_fit - resid_oracle) < 1e-6
        assert fitted == pytest.approx(p_oracle, abs=1e-6)

    def test_perturbation_increases_residual(self):
        # full-rank instance: the fitted point is the strict minimizer
        rng = np.random.default_rng(3)
        codes = ["A", "B", "C"]
        x = np.array([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [2, 1, 1]], float)
        y = x @ np.array([4.0, -2.0, 7.0]) + rng.normal(0, 0.5, 6)
        training = [
            (fv(**{c: int(x[i, j]) for j, c in enumerate(codes) if x[i, j]}), obs(y[i]))
            for i in range(len(x))
        ]
        report = fit_parameters(training, Phase.GAS)
        fitted = np.array([report.fitted.entries[c] for c in codes])
        base = np.linalg.norm(x @ fitted - y)
        for j in range(3):
            for eps in (0.01, -0.01, 0.1, -0.1):
                p = fitted.copy()
                p[j] += eps
                assert np.linalg.norm(x @ p - y) > base

    def test_empty_training_set_rejected(self):
        with pytest.raises(ValueError):
            fit_parameters([], Phase.GAS)

    def test_phase_mismatch_rejected(self):
        with pytest.raises(ValueError):
            fit_parameters([(fv(A=1), obs(1.0, phase=Phase.GAS))], Phase.LIQUID)

    def test_fit_estimate_idempotence(self):
        # zero-residual training reproduces y exactly through estimate()
        table_true = {"A": 3.0, "B": -1.0}
        rows = [fv(A=1, B=2), fv(A=2), fv(B=1), fv(A=1, B=1)]
        training = [
            (r, obs(sum(table_true[c] * n for c, n in r.counts.items()))) for r in rows
        ]
        report = fit_parameters(training, Phase.GAS)
        for r, o in training:
            assert estimate(r, report.fitted).value == pytest.approx(o.value, abs=1e-9)


class TestTableIO:
    def test_json_roundtrip(self, tmp_path):
        table = ParameterTable(
            phase=Phase.LIQUID,
            entries={"C1C1": -13.5, "C1H": -11.7},
            provenance={"dataset_id": "x"},
        )
        path = tmp_path / "liquid.json"
        table.dump(path)
        back = ParameterTable.load(path)
        assert back.phase is Phase.LIQUID
        assert back.entries == table.entries

    def test_non_finite_entry_rejected(self):
        with pytest.raises(ValueError):
            ParameterTable(phase=Phase.GAS, entries={"A": math.nan})


def tv(kind, value, unc=None):
    return ThermoValue(kind=ThermoKind(kind), value=value, uncertainty=unc)


class TestConsistency:
    def test_squaric_acid_consistent(self):
        findings = consistency_check([
            tv("formation_gas", -514.5, 16.6),
            tv("formation_crystal", -596.2, 0.4),
            tv("sublimation", 83.7, 16.7),
        ])
        assert len(findings) == 1
        f = findings[0]
        assert f.residual == pytest.approx(2.0, abs=1e-9)
        assert f.combined_uncertainty == pytest.approx(23.5, abs=0.1)
        assert f.consistent
        assert not f.missing_uncertainties

    def test_implied_vaporization(self):
        values = [tv("formation_gas", -171.5), tv("formation_liquid", -212.1)]
        assert implied_value(values, ThermoKind.VAPORIZATION) == pytest.approx(40.6)

    def test_single_value_yields_no_findings(self):
        assert consistency_check([tv("formation_gas", -171.5)]) == []

    def test_gross_violation_flagged(self):
        findings = consistency_check([
            tv("formation_gas", -100.0, 1.0),
            tv("formation_liquid", -140.0, 1.0),
            tv("vaporization", 90.0, 1.0),  # off by 50
        ])
        assert len(findings) == 1
        assert findings[0].residual == pytest.approx(50.0)
        assert not findings[0].consistent

    def test_missing_uncertainty_warns(self):
        findings = consistency_check([
            tv("formation_gas", -100.0),
            tv("formation_liquid", -140.0, 1.0),
            tv("vaporization", 40.0, 1.0),
        ])
        assert findings[0].missing_uncertainties
        assert findings[0].consistent

    def test_all_four_identities_on_full_record(self):
        # synthetic crystal/liquid/gas triple built to be exactly consistent
        g, l, c = -100.0, -150.0, -170.0
        findings = consistency_check([
            tv("formation_gas", g, 1.0),
            tv("formation_liquid", l, 1.0),
            tv("formation_crystal", c, 1.0),
            tv("sublimation", g - c, 1.0),
            tv("vaporization", g - l, 1.0),
            tv("fusion", l - c, 1.0),
        ])
        assert len(findings) == 4
        assert all(f.residual == pytest.approx(0.0, abs=1e-12) for f in findings)
        assert all(f.consistent for f in findings)
