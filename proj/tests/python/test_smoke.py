import math

import numpy as np
import pytest

import enscoh


def fast():
    cfg = enscoh.OptimizerConfig.defaults_for(2, 2)
    cfg.restarts = 12
    return cfg


def test_registry_and_json_round_trip():
    names = enscoh.ensemble_names()
    assert "e2" in names and "pyramid" in names
    e = enscoh.named_ensemble("e2")
    assert (e.d1, e.d2, len(e)) == (2, 2, 4)
    back = enscoh.ProductEnsemble.from_json(e.to_json())
    for (a, b), (c, d) in zip(e.states, back.states):
        assert np.allclose(a, c) and np.allclose(b, d)
    np.testing.assert_allclose(e.superposed_state(), [0.5, 0.5, 1 / math.sqrt(2), 0], atol=1e-12)


def test_coherence_values():
    plus = np.array([1, 1]) / math.sqrt(2)
    assert enscoh.coherence(enscoh.Measure.L1, plus) == pytest.approx(1.0)
    assert enscoh.c_rel(np.diag([0.5, 0.5]).astype(complex)) == pytest.approx(0.0)
    assert enscoh.max_coherence(enscoh.Measure.L1, 9) == 8.0


def test_mec_of_e1_and_e2():
    r1 = enscoh.mec(enscoh.named_ensemble("e1"))
    assert r1.mec == 3.0 and r1.mec_normalized == 1.0
    r2 = enscoh.mec(enscoh.named_ensemble("e2"), enscoh.Measure.L1, fast())
    assert r2.tau == pytest.approx(2.0, abs=1e-8)
    assert r2.mec == pytest.approx(1.914, abs=0.005)
    assert r2.u2.shape == (2, 2)


def test_discrimination_of_e2():
    r = enscoh.success_probability(enscoh.named_ensemble("e2"), fast())
    assert r.p_succ_worst == pytest.approx(math.cos(math.pi / 8) ** 2, abs=1e-8)
    assert r.reduced_sets == [1, 4]
    assert enscoh.brute_force_oracle(enscoh.named_ensemble("e2"), 1e-3) == pytest.approx(0.853553, abs=1e-3)


def test_relative_local_coherence_and_errors():
    e = enscoh.make_arb_2x2(0.3, 1.2)
    assert enscoh.relative_local_coherence(e) == pytest.approx(abs(math.sin(0.9)), abs=1e-12)
    with pytest.raises(ValueError):
        enscoh.relative_local_coherence(enscoh.named_ensemble("nlwe"))
    with pytest.raises(ValueError):
        enscoh.named_ensemble("missing")
    with pytest.raises(ValueError):
        enscoh.ProductEnsemble(2, 2, [(np.array([1, 0]), np.array([1, 0]))] * 2)


def test_sweep_csv_is_deterministic():
    a = enscoh.sweep_csv("2x2-real", 3, seed=5, restarts=6)
    assert a == enscoh.sweep_csv("2x2-real", 3, seed=5, restarts=6)
    lines = a.splitlines()
    assert lines[0] == "theta1,phi1,theta2,phi2,c_r,mec_n_l1,mec_n_rel,cd_l1,p_succ"
    assert len(lines) == 4
