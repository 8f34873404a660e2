"""Mean connectivity when non-protected links fail at random.

Two estimates: the heuristic closed forms for each strategy, and a Monte
Carlo estimate of the probability that the surviving network is still
(k1, k2)-resistant. Protected links never fail.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .designer import DesignParams, StrategyKind
from .graph import TwoLayerNetwork
from .verifier import is_resistant_mincut

RNG_ALGORITHM = "numpy.PCG64(SeedSequence([seed, chunk]))"
CHUNK = 4096

Probability = Union[float, Fraction]


def _check_kappa(kappa: Probability) -> None:
    if not 0 <= kappa < 1:
        raise ValueError(f"failure probability must lie in [0, 1), got {kappa}")


def closed_form_exponent(params: DesignParams, strategy: StrategyKind) -> int:
    n1, n2, k1, k2 = params.n1, params.n2, params.k1, params.k2
    strategy = StrategyKind(strategy)
    if strategy is StrategyKind.S0:
        return -(-(n1 * (k1 + 1) + n2 * (k2 + 1)) // 2) - k2
    if strategy is StrategyKind.SN2M1:
        return -(-(k1 + 1) * (n1 + 1) // 2)
    return 0


def closed_form_mean_connectivity(params: DesignParams, strategy: StrategyKind, kappa: Probability) -> float:
    """Approximate connection probability ``(1 - kappa) ** e`` for the strategy.

    The exponent is ``ceil((n1(k1+1) + n2(k2+1)) / 2) - k2`` for S0,
    ``ceil((k1+1)(n1+1) / 2)`` for SN2M1 and 0 for SNM1. These are heuristic
    approximations; compare with :func:`monte_carlo_mean_connectivity`.
    """
    _check_kappa(kappa)
    return float((1 - Fraction(kappa)) ** closed_form_exponent(params, strategy))


@dataclass(frozen=True)
class FailureModel:
    kappa: float
    trials: int
    seed: int

    def __post_init__(self) -> None:
        _check_kappa(self.kappa)
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    halfwidth: float
    successes: int
    trials: int
    seed: int
    rng: str = RNG_ALGORITHM


def _chunk_uniforms(seed: int, chunk: int, rows: int, m: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, chunk])))
    return rng.random((rows, m))


def _run_chunk(
    net: TwoLayerNetwork, kappa: float, k1: int, k2: int, seed: int, chunk: int, rows: int,
    cache: Optional[dict] = None,
) -> int:
    edges = sorted(net.nonprotected)
    m = len(edges)
    if m == 0:
        return rows if is_resistant_mincut(net, k1, k2).resistant else 0
    cache = {} if cache is None else cache
    failed = _chunk_uniforms(seed, chunk, rows, m) < kappa
    patterns, counts = np.unique(np.packbits(failed, axis=1), axis=0, return_counts=True)
    ok = 0
    for packed, count in zip(patterns, counts):
        key = packed.tobytes()
        if key not in cache:
            mask = np.unpackbits(packed)[:m].astype(bool)
            survivor = net.without_nonprotected(e for e, dead in zip(edges, mask) if dead)
            cache[key] = is_resistant_mincut(survivor, k1, k2).resistant
        if cache[key]:
            ok += int(count)
    return ok


def _workers_from_env() -> int:
    raw = os.environ.get("RESISTNET_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"RESISTNET_THREADS must be an integer, got {raw!r}") from None
    if value == 0:
        return os.cpu_count() or 1
    return max(value, 1)


def monte_carlo_mean_connectivity(
    net: TwoLayerNetwork,
    model: FailureModel,
    k1: int,
    k2: int,
    workers: Optional[int] = None,
) -> MonteCarloEstimate:
    """Fraction of trials in which the network minus its failed links is
    still (k1, k2)-resistant, with a 95% normal-approximation half-width.

    Trials are drawn in fixed chunks of ``CHUNK`` rows, each chunk seeded from
    ``(seed, chunk index)``, so the result does not depend on ``workers``.
    A link fails iff its uniform draw is below kappa, which makes estimates
    at different kappa with the same seed monotone.
    """
    workers = _workers_from_env() if workers is None else workers
    sizes = [min(CHUNK, model.trials - start) for start in range(0, model.trials, CHUNK)]
    if workers > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_chunk, net, model.kappa, k1, k2, model.seed, c, rows)
                for c, rows in enumerate(sizes)
            ]
            successes = sum(f.result() for f in futures)
    else:
        cache: dict = {}
        successes = sum(
            _run_chunk(net, model.kappa, k1, k2, model.seed, c, rows, cache) for c, rows in enumerate(sizes)
        )
    est = successes / model.trials
    half = 1.96 * math.sqrt(est * (1 - est) / model.trials)
    return MonteCarloEstimate(est, half, successes, model.trials, model.seed)


def infer_strategy(net: TwoLayerNetwork) -> Optional[StrategyKind]:
    """Guess which construction produced ``net`` from its protected links."""
    if net.p == 0:
        return StrategyKind.S0
    if net.p == net.n - 1:
        return StrategyKind.SNM1
    type2 = set(net.type2_nodes)
    if net.p == net.n2 - 1 and all(u in type2 and v in type2 for u, v in net.protected):
        return StrategyKind.SN2M1
    return None
