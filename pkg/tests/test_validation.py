"""The cross-check harness itself: determinism and mutation sensitivity."""

import numpy as np
import pytest

import triqubit.dynamics as dynamics
import triqubit.validation as validation
from triqubit import SystemDensityMatrix


def test_all_suites_pass_on_small_draw():
    run = validation.run_all(seed=1, cases=5)
    assert run.passed
    assert len(run.checks) == 17
    assert all(c.cases >= 5 for c in run.checks)


def test_deterministic_for_fixed_seed():
    first = validation.run_all(seed=7, cases=3)
    second = validation.run_all(seed=7, cases=3)
    assert first.to_dict() == second.to_dict()


def test_different_seeds_differ():
    a = validation.run_all(seed=1, cases=3)
    b = validation.run_all(seed=2, cases=3)
    assert a.to_dict() != b.to_dict()


def test_rejects_zero_cases():
    with pytest.raises(ValueError):
        validation.run_all(seed=1, cases=0)


def test_draw_config_respects_pole_gap(rng):
    for _ in range(200):
        cfg = validation.draw_config(rng)
        assert abs(cfg.eps_a - cfg.eps_b) >= validation.MIN_POLE_GAP
        assert 0.05 <= cfg.coupling_a <= 5.0


def test_corrupted_engine_is_caught(monkeypatch):
    # Conjugating the density matrix flips the sign of every coherence's
    # imaginary part; the result is still a valid state, so only the oracle
    # comparison can notice.
    true_density = dynamics.density_inhomogeneous

    def conjugated(cfg, t):
        return SystemDensityMatrix(true_density(cfg, t).matrix.conj())

    monkeypatch.setattr(dynamics, "density_inhomogeneous", conjugated)
    run = validation.run_all(seed=1, cases=5)
    assert not run.passed
    failing = {c.name for c in run.failures()}
    assert any(name.startswith("oracle-equivalence/") for name in failing)
    assert run.failures()[0].name.startswith("oracle-equivalence/")


def test_check_result_serialization():
    run = validation.run_all(seed=3, cases=2)
    payload = run.to_dict()
    assert payload["passed"] is True
    assert {c["name"] for c in payload["checks"]} == {c.name for c in run.checks}
    for entry in payload["checks"]:
        assert entry["max_deviation"] <= entry["tolerance"]
        assert entry["worst_case"]
