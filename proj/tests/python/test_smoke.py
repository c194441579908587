import json
import math
import os
from pathlib import Path

import pytest

import fracvar

CONFIGS = Path(os.environ.get("FRACVAR_CONFIG_DIR", Path(__file__).resolve().parents[2] / "configs"))


def small_config(**overrides):
    cfg = json.loads((CONFIGS / "power_sum.json").read_text())
    cfg.update({"n": 256, "k_max": 32})
    cfg.update(overrides)
    return cfg


def test_gamma_matches_math():
    for x in (0.25, 0.75, 1.5, 4.2):
        assert fracvar.gamma(x) == pytest.approx(math.gamma(x), rel=1e-13)


def test_constants():
    g = math.gamma(0.75)
    assert fracvar.embedding_constant(0.75, 1.0) == pytest.approx(1 / (g * math.sqrt(0.5)), rel=1e-12)
    assert fracvar.kappa_alpha(0.75, 1.0) == pytest.approx(1 / (g * g * math.cos(math.pi / 4) * 0.5), rel=1e-12)


def test_kernel_verify_rows_pass():
    rows = fracvar.kernel_verify(0.75, 1.0, 512)
    assert rows
    assert all(r["passed"] for r in rows), [r for r in rows if not r["passed"]]


def test_conditions_from_path():
    report = fracvar.conditions(CONFIGS / "power_sum.json")
    assert report["mu_star"] == pytest.approx(0.530912068, rel=1e-6)
    assert report["gamma_bar"] == pytest.approx(1.0, rel=1e-6)


def test_solve_is_nontrivial():
    rec = fracvar.solve(small_config(), 0.25)
    assert rec["energy"] < 0
    assert rec["nontrivial"]
    assert len(rec["t"]) == len(rec["u"]) == 257


def test_sweep_verdicts():
    report = fracvar.sweep(small_config(), 0.05, 0.5, count=4)
    assert len(report["records"]) == 4
    assert report["negativity_verdict"]


def test_sweep_outside_interval_raises():
    with pytest.raises(fracvar.HypothesisError, match="admissible interval"):
        fracvar.sweep(small_config(), 0.6, 0.9, count=4)


def test_bad_config_raises():
    with pytest.raises(ValueError):
        fracvar.solve({"alpha": 0.3, "T": 1, "n": 64, "k_max": 8}, 0.1)


def test_ray_scan_unbounded():
    cfg = json.loads((CONFIGS / "affine_power.json").read_text())
    scan = fracvar.ray_scan(cfg, 0.1)
    assert scan["unbounded_below"]
