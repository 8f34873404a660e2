"""Lower bound on the non-protected links of a resistant network.

``phi(p)`` bounds the number of non-protected links any (k1, k2)-resistant
network with ``p`` protected links must carry. It is kept as an exact
``Fraction``; the usable integer bound is its ceiling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _check(n1: int, n2: int, k1: int, k2: int, p: int | None = None) -> None:
    if n1 < 1 or n2 < 1:
        raise ValueError(f"need n1 >= 1 and n2 >= 1, got n1={n1}, n2={n2}")
    if k1 < 0 or k2 < 0:
        raise ValueError(f"resistance levels must be non-negative, got k1={k1}, k2={k2}")
    if k1 > k2:
        raise ValueError(f"need k1 <= k2, got k1={k1} > k2={k2}")
    if p is not None and not 0 <= p <= n1 + n2 - 1:
        raise ValueError(f"p={p} outside [0, {n1 + n2 - 1}]")


def lower_bound(n1: int, n2: int, k1: int, k2: int, p: int) -> Fraction:
    """Closed-form minimum number of non-protected links given ``p`` protected ones."""
    _check(n1, n2, k1, k2, p)
    n = n1 + n2
    if p <= n2 - 2:
        return Fraction(n1 * (k1 + 1) + (n2 - p) * (k2 + 1), 2)
    if p <= n - 2:
        return Fraction((n - p) * (k1 + 1), 2)
    return Fraction(0)


def required_links(n1: int, n2: int, k1: int, k2: int, p: int) -> int:
    return math.ceil(lower_bound(n1, n2, k1, k2, p))


def block_objective(nu0: int, nu1: int, nu2: int, k1: int, k2: int) -> Fraction:
    """Degree-sum bound for a contraction with the given block counts."""
    if nu0 + nu1 + nu2 == 1:
        return Fraction(0)
    if nu2 + nu0 > 1:
        return Fraction(nu1 * (k1 + 1) + (nu0 + nu2) * (k2 + 1), 2)
    # nu1 >= 1 and exactly one block holds type-2 nodes
    return Fraction((nu1 + 1) * (k1 + 1), 2)


def lp_oracle(n1: int, n2: int, k1: int, k2: int, p: int) -> Fraction:
    """Brute-force minimum of the block objective over feasible block counts.

    Independent of :func:`lower_bound`: enumerates every integer triple and
    keeps those satisfying the contraction constraints.
    """
    _check(n1, n2, k1, k2, p)
    n = n1 + n2
    best = None
    for nu1 in range(n1 + 1):
        for nu2 in range(n2 + 1):
            for nu0 in range(min(n1, n2) + 1):
                if nu0 + nu1 + nu2 < n - p:
                    continue
                if nu0 + nu1 < n1 - p or nu0 + nu2 < n2 - p:
                    continue
                if nu1 + nu0 < 1 or nu2 + nu0 < 1:
                    continue
                val = block_objective(nu0, nu1, nu2, k1, k2)
                if best is None or val < best:
                    best = val
    assert best is not None
    return best


@dataclass(frozen=True)
class Breakpoint:
    label: str
    p: int
    phi: Fraction


@dataclass(frozen=True)
class BoundCurve:
    """Piecewise-linear bound with breakpoints A..E and segment slopes.

    Breakpoints whose ``p`` falls outside ``[0, n - 1]`` are dropped (B when
    n2 = 1); coinciding breakpoints are all kept. ``slopes`` holds the nominal
    magnitude of each segment, which is also the measured slope whenever the
    segment spans a positive ``p`` interval.
    """

    n1: int
    n2: int
    k1: int
    k2: int
    breakpoints: tuple[Breakpoint, ...]
    slopes: dict[str, Fraction]

    def point(self, label: str) -> Breakpoint:
        for bp in self.breakpoints:
            if bp.label == label:
                return bp
        raise KeyError(label)

    def measured_slopes(self) -> dict[str, Fraction]:
        out = {}
        for left, right in zip(self.breakpoints, self.breakpoints[1:]):
            if right.p > left.p:
                out[f"{left.label}-{right.label}"] = (left.phi - right.phi) / (right.p - left.p)
        return out

    def label_at(self, p: int) -> str:
        here = [bp.label for bp in self.breakpoints if bp.p == p]
        if here:
            return "=".join(here)
        bps = self.breakpoints
        for left, right in zip(bps, bps[1:]):
            if left.p < p < right.p:
                return f"{left.label}-{right.label}"
        raise ValueError(f"p={p} outside the curve")

    def rows(self) -> list[tuple[int, Fraction, int, str]]:
        """``(p, phi, ceil(phi), label)`` for every admissible ``p``."""
        n = self.n1 + self.n2
        out = []
        for p in range(n):
            phi = lower_bound(self.n1, self.n2, self.k1, self.k2, p)
            out.append((p, phi, math.ceil(phi), self.label_at(p)))
        return out


def curve(n1: int, n2: int, k1: int, k2: int) -> BoundCurve:
    _check(n1, n2, k1, k2)
    n = n1 + n2
    spots = [("A", 0), ("B", n2 - 2), ("C", n2 - 1), ("D", n - 2), ("E", n - 1)]
    bps = tuple(
        Breakpoint(label, p, lower_bound(n1, n2, k1, k2, p))
        for label, p in spots
        if 0 <= p <= n - 1
    )
    slopes = {
        "A-B": Fraction(k2 + 1, 2),
        "B-C": Fraction((k2 + 1) + (k2 - k1), 2),
        "C-D": Fraction(k1 + 1, 2),
        "D-E": Fraction(k1 + 1),
    }
    return BoundCurve(n1, n2, k1, k2, bps, slopes)
