import math
from fractions import Fraction

import pytest

from resistnet.designer import DesignParams, StrategyKind, build_s0, build_s_n2m1, design
from resistnet.graph import TwoLayerNetwork
from resistnet.reliability import (
    RNG_ALGORITHM,
    FailureModel,
    closed_form_exponent,
    closed_form_mean_connectivity,
    infer_strategy,
    monte_carlo_mean_connectivity,
)

PRM = DesignParams(20, 5, 5, 9, 5, 1)
SINGLE = TwoLayerNetwork.from_edges(1, 1, nonprotected=[(1, 2)])


def test_closed_form_basics():
    for kind in StrategyKind:
        assert closed_form_mean_connectivity(PRM, kind, 0) == 1
        # SNM1 has nothing to lose
    for kappa in (0.01, 0.5, 0.99):
        assert closed_form_mean_connectivity(PRM, StrategyKind.SNM1, kappa) == 1
    assert closed_form_exponent(PRM, StrategyKind.S0) == 76
    assert closed_form_exponent(PRM, "SN2M1") == 63
    assert math.isclose(closed_form_mean_connectivity(PRM, StrategyKind.S0, 0.01), 0.99**76, rel_tol=1e-12)
    with pytest.raises(ValueError):
        closed_form_mean_connectivity(PRM, StrategyKind.S0, 1)


def test_failure_model_validation():
    for bad in [dict(kappa=-0.1, trials=1, seed=0), dict(kappa=0.1, trials=0, seed=0), dict(kappa=0.1, trials=1, seed=-1)]:
        with pytest.raises(ValueError):
            FailureModel(**bad)


def test_kappa_zero_is_exactly_one():
    est = monte_carlo_mean_connectivity(build_s_n2m1(20, 5, 5), FailureModel(0.0, 5000, 1), 5, 9)
    assert est.estimate == 1.0 and est.successes == 5000 and est.halfwidth == 0
    assert est.rng == RNG_ALGORITHM


def test_bernoulli_single_edge():
    est = monte_carlo_mean_connectivity(SINGLE, FailureModel(0.3, 100_000, 7), 0, 0)
    assert abs(est.estimate - 0.7) <= est.halfwidth
    assert math.isclose(est.halfwidth, 1.96 * math.sqrt(est.estimate * (1 - est.estimate) / 1e5))


def test_deterministic_and_worker_independent():
    net = build_s0(6, 2, 1, 2)
    model = FailureModel(0.1, 9000, 42)
    a = monte_carlo_mean_connectivity(net, model, 0, 0, workers=1)
    b = monte_carlo_mean_connectivity(net, model, 0, 0, workers=1)
    c = monte_carlo_mean_connectivity(net, model, 0, 0, workers=2)
    assert a == b == c


def test_env_threads(monkeypatch):
    net = build_s0(6, 2, 1, 2)
    model = FailureModel(0.1, 5000, 3)
    base = monte_carlo_mean_connectivity(net, model, 0, 0, workers=1)
    monkeypatch.setenv("RESISTNET_THREADS", "0")
    assert monte_carlo_mean_connectivity(net, model, 0, 0) == base
    monkeypatch.setenv("RESISTNET_THREADS", "many")
    with pytest.raises(ValueError):
        monte_carlo_mean_connectivity(net, model, 0, 0)


def test_monotone_in_kappa():
    net = build_s0(6, 2, 1, 2)
    vals = [monte_carlo_mean_connectivity(net, FailureModel(k, 4000, 11), 0, 1).estimate for k in (0.0, 0.05, 0.1, 0.2, 0.4)]
    assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_protected_only_never_fails():
    res = design(DesignParams(4, 2, 1, 3, 1, 1))
    net = res.network
    if net.m == 0:
        est = monte_carlo_mean_connectivity(net, FailureModel(0.9, 100, 0), 1, 3)
        assert est.estimate == 1


def test_side_by_side_s_d4():
    # no tolerance between the heuristic and the simulation, reported only
    net = build_s_n2m1(20, 5, 5)
    mc = monte_carlo_mean_connectivity(net, FailureModel(0.02, 2000, 5), 5, 9)
    cf = closed_form_mean_connectivity(PRM, StrategyKind.SN2M1, 0.02)
    print(f"kappa=0.02 closed_form={cf:.4f} mc={mc.estimate:.4f}+-{mc.halfwidth:.4f}")
    assert 0 <= mc.estimate <= 1 and 0 < cf <= 1


def test_infer_strategy():
    assert infer_strategy(build_s0(6, 2, 1, 2)) is StrategyKind.S0
    assert infer_strategy(build_s_n2m1(20, 5, 5)) is StrategyKind.SN2M1
    assert infer_strategy(design(DesignParams(20, 5, 5, 9, 3, 1)).network) is StrategyKind.SNM1
    odd = TwoLayerNetwork.from_edges(2, 2, protected=[(1, 2)], nonprotected=[(2, 3), (3, 4)])
    assert infer_strategy(odd) is None


def test_fraction_kappa():
    assert closed_form_mean_connectivity(PRM, StrategyKind.SN2M1, Fraction(1, 2)) == 0.5**63
