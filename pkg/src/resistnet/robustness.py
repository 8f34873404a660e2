"""How far a design stays resistant as the requirements grow, and k2 sweeps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .designer import DesignParams, DesignResult, PreconditionError, StrategyKind, design, thresholds
from .verifier import is_resistant_mincut

IntRange = tuple[int, Optional[int]]  # inclusive; None = unbounded above


@dataclass(frozen=True)
class RobustRange:
    k1: int
    k2: int
    strategy: StrategyKind
    k1_range: IntRange
    k2_range: IntRange
    samples_checked: int = 0


def _sample(rng: IntRange, count: int) -> list[int]:
    lo, hi = rng
    top = lo + count - 1 if hi is None else min(hi, lo + count - 1)
    return list(range(lo, top + 1))


def robust_range(result: DesignResult, samples: int = 20) -> RobustRange:
    """Requirement ranges the built network meets without modification.

    SNM1 has no attackable link, so both levels may grow freely. SN2M1 keeps
    every type-2 node in one protected component, so only k2 may grow. S0 is
    pinned to its base point. Up to ``samples`` points of the claimed region
    are re-verified.

    Raises:
        AssertionError: if a sampled point fails verification.
    """
    k1, k2 = result.params.k1, result.params.k2
    kind = result.strategy
    if kind is StrategyKind.SNM1:
        r1, r2 = (k1, None), (k2, None)
    elif kind is StrategyKind.SN2M1:
        r1, r2 = (k1, k1), (k2, None)
    else:
        r1, r2 = (k1, k1), (k2, k2)

    side = max(1, int(samples**0.5))
    xs = _sample(r1, side)
    ys = _sample(r2, max(1, samples // len(xs)))
    points = [(a, b) for a, b in itertools.product(xs, ys) if a <= b][:samples]
    for a, b in points:
        if not is_resistant_mincut(result.network, a, b).resistant:
            raise AssertionError(f"{kind.value} design not resistant at claimed point ({a}, {b})")
    return RobustRange(k1, k2, kind, r1, r2, len(points))


@dataclass(frozen=True)
class SweepRow:
    k2: int
    result: Optional[DesignResult] = None
    t2: Optional[Fraction] = None
    error: Optional[str] = None

    @property
    def below_t2(self) -> Optional[bool]:
        """Whether cP/cNP < T2(k2), the condition SN2M1 needs to stay optimal."""
        if self.result is None or self.t2 is None:
            return None
        return self.result.params.ratio < self.t2


def sweep_k2(n1: int, n2: int, k1: int, cp, cnp, k2_values) -> list[SweepRow]:
    """One independent design per k2, ascending. Invalid rows carry ``error``."""
    rows = []
    for k2 in sorted(set(k2_values)):
        try:
            params = DesignParams(n1, n2, k1, k2, cp, cnp)
            rows.append(SweepRow(k2, design(params), thresholds(params).t2))
        except (PreconditionError, ValueError, RuntimeError) as exc:
            rows.append(SweepRow(k2, error=str(exc)))
    return rows
