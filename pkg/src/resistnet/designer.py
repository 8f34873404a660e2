"""Minimum-cost (k1, k2)-resistant designs.

Three constructions are available: an all-protected spanning path
(``SNM1``, p = n - 1), a protected type-2 path plus a non-protected Harary
network on the type-1 layer and one type-2 node (``SN2M1``, p = n2 - 1), and
an all-non-protected interleaved Harary network with a type-2 overlay
(``S0``, p = 0). Which one is cheapest depends on the regime and on the ratio
cP / cNP.
"""

from __future__ import annotations

import enum
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .bounds import lower_bound, required_links
from .graph import Edge, TwoLayerNetwork, norm_edge
from .harary import harary_edges, overlay
from .verifier import is_resistant_mincut

logger = logging.getLogger(__name__)

Number = Union[int, Fraction, str]

# overlay offset sets tried per S0 build before giving up
MAX_OVERLAY_CANDIDATES = 500


class PreconditionError(ValueError):
    """A construction or parameter assumption does not hold."""


class NoFeasibleCandidate(RuntimeError):
    pass


class StrategyKind(str, enum.Enum):
    S0 = "S0"
    SN2M1 = "SN2M1"
    SNM1 = "SNM1"


@dataclass(frozen=True)
class DesignParams:
    n1: int
    n2: int
    k1: int
    k2: int
    cp: Fraction = Fraction(1)
    cnp: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "cp", Fraction(self.cp))
        object.__setattr__(self, "cnp", Fraction(self.cnp))
        if self.n1 < 1 or self.n2 < 1:
            raise PreconditionError(f"need n1 >= 1 and n2 >= 1, got n1={self.n1}, n2={self.n2}")
        if self.k1 < 0 or self.k2 < 0:
            raise PreconditionError(f"resistance levels must be non-negative, got k1={self.k1}, k2={self.k2}")
        if self.k1 > self.k2:
            raise PreconditionError(f"need k1 <= k2, got k1={self.k1} > k2={self.k2}")
        if self.cp <= 0 or self.cnp <= 0:
            raise PreconditionError("link costs must be positive")
        if self.cnp > self.cp:
            raise PreconditionError(f"need cNP <= cP, got cNP={self.cnp} > cP={self.cp}")

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def ratio(self) -> Fraction:
        return self.cp / self.cnp

    def with_k2(self, k2: int) -> DesignParams:
        return DesignParams(self.n1, self.n2, self.k1, k2, self.cp, self.cnp)

    def cost(self, net: TwoLayerNetwork) -> Fraction:
        return self.cp * net.p + self.cnp * net.m


@dataclass(frozen=True)
class Regime:
    name: str  # "I" or "II"
    subcase: Optional[str] = None  # "II-1" or "II-2"

    @property
    def follows_regime_one(self) -> bool:
        return self.name == "I" or self.subcase == "II-1"


def classify_regime(params: DesignParams) -> Regime:
    n1, n2, k1, k2 = params.n1, params.n2, params.k1, params.k2
    if 1 + k1 - params.n * (k2 - k1) <= 0:
        return Regime("I")
    # 1 + k1 - n1 (k2 - k1) > 0 here since n1 < n
    cutoff = Fraction(1 + k1, 1 + k1 - n1 * (k2 - k1))
    return Regime("II", "II-1" if n2 < cutoff else "II-2")


@dataclass(frozen=True)
class Thresholds:
    """Cost-ratio switch points. ``t2`` is None when n2 = 1."""

    t1: Fraction
    t2: Optional[Fraction]
    t_ae: Fraction


def thresholds(params: DesignParams) -> Thresholds:
    n1, n2, k1, k2 = params.n1, params.n2, params.k1, params.k2
    t1 = (k1 + 1 + Fraction(k1 + 1, n1)) / 2
    t2 = (k2 + 1 + Fraction(k2 - k1, n2 - 1)) / 2 if n2 >= 2 else None
    t_ae = Fraction(n1 * (k1 + 1) + n2 * (k2 + 1), 2 * (params.n - 1))
    return Thresholds(t1, t2, t_ae)


def optimality_preconditions(params: DesignParams) -> list[str]:
    """Failing assumptions under which the threshold rule is proven optimal."""
    n1, n2, k1, k2 = params.n1, params.n2, params.k1, params.k2
    failed = []
    if n1 < k1 + 1:
        failed.append("n1 >= k1 + 1")
    if n2 < k2 - k1 + 1:
        failed.append("n2 >= k2 - k1 + 1")
    if n2 * (k1 + 1) > 2 * n1:
        failed.append("n2 (k1 + 1) / 2 <= n1")
    if k1 % 2 != 1:
        failed.append("k1 odd")
    if n2 * (k2 + 1) % 2 != 0:
        failed.append("n2 (k2 + 1) even")
    return failed


def select_strategy(params: DesignParams) -> StrategyKind:
    """Threshold rule on cP / cNP; ties go to the cheaper-in-links side."""
    r = params.ratio
    th = thresholds(params)
    regime = classify_regime(params)
    if regime.follows_regime_one:
        if th.t2 is None:
            # n2 = 1: S0 and SN2M1 coincide at p = 0
            return StrategyKind.S0 if r >= th.t1 else StrategyKind.SNM1
        if r >= th.t2:
            return StrategyKind.S0
        if r >= th.t1:
            return StrategyKind.SN2M1
        return StrategyKind.SNM1
    return StrategyKind.S0 if r >= th.t_ae else StrategyKind.SNM1


def _path(nodes: range | list[int]) -> list[Edge]:
    nodes = list(nodes)
    return [norm_edge(a, b) for a, b in zip(nodes, nodes[1:])]


def build_s_nm1(n1: int, n2: int) -> TwoLayerNetwork:
    """Protected path ``1 - 2 - ... - n``; no non-protected links."""
    return TwoLayerNetwork.from_edges(n1, n2, protected=_path(range(1, n1 + n2 + 1)))


def build_s_n2m1(n1: int, n2: int, k1: int) -> TwoLayerNetwork:
    """Protected path over the type-2 nodes plus a (k1+1)-Harary network of
    non-protected links over ``1..n1`` and node ``n1 + 1``.

    Raises:
        PreconditionError: if ``k1 + 1 > n1``; the bound at p = n2 - 1 is then
            unattainable.
    """
    if n1 < 1 or n2 < 1:
        raise PreconditionError(f"need n1 >= 1 and n2 >= 1, got n1={n1}, n2={n2}")
    if k1 + 1 > n1:
        raise PreconditionError(
            f"k1 + 1 = {k1 + 1} > n1 = {n1}: a (k1+1)-Harary network on n1 + 1 nodes does not exist, "
            "so p = n2 - 1 cannot reach its lower bound"
        )
    harary = harary_edges(list(range(1, n1 + 2)), k1 + 1)
    return TwoLayerNetwork.from_edges(n1, n2, protected=_path(range(n1 + 1, n1 + n2 + 1)), nonprotected=harary)


def interleaved_order(n1: int, n2: int, k1: int) -> list[int]:
    """Node order with type-2 nodes spread among type-1 nodes.

    When ``n2 (k1+1)/2 <= n1`` one type-2 node follows every run of
    ``(k1+1)/2`` type-1 nodes and leftover type-1 nodes go last. Otherwise the
    type-1 nodes are split as evenly as possible across the n2 gaps.
    """
    run = (k1 + 1) // 2
    type1 = iter(range(1, n1 + 1))
    order: list[int] = []
    if n2 * run <= n1:
        gaps = [run] * n2
    else:
        gaps = [(j + 1) * n1 // n2 - j * n1 // n2 for j in range(n2)]
    for j, gap in enumerate(gaps):
        order.extend(next(type1) for _ in range(gap))
        order.append(n1 + 1 + j)
    order.extend(type1)
    return order


def _overlay_candidates(type2: list[int], degree: int):
    """Degree-``degree`` circulants on the type-2 nodes, standard Harary first."""
    yield harary_edges(type2, degree)
    n2 = len(type2)
    half, odd = divmod(degree, 2)
    max_offset = (n2 - 1) // 2
    # odd degree on odd n2 uses chords of circular length max_offset
    offsets = range(1, max_offset + (0 if odd and n2 % 2 else 1))
    for chosen in itertools.combinations(offsets, half):
        edges = set()
        for off in chosen:
            edges.update(norm_edge(type2[i], type2[(i + off) % n2]) for i in range(n2))
        if odd:
            if n2 % 2 == 0:
                edges.update(norm_edge(type2[i], type2[i + n2 // 2]) for i in range(n2 // 2))
            else:
                step = (n2 + 1) // 2
                edges.update(norm_edge(type2[i], type2[(i + step) % n2]) for i in range(n2 // 2 + 1))
        yield sorted(edges)


def build_s0(n1: int, n2: int, k1: int, k2: int) -> TwoLayerNetwork:
    """All-non-protected design with ``ceil((n1(k1+1) + n2(k2+1)) / 2)`` links.

    A (k1+1)-Harary network over :func:`interleaved_order`, overlaid with a
    (k2-k1)-regular circulant on the type-2 nodes. When the spacing condition
    ``n2 (k1+1)/2 <= n1`` holds the base has no type-2 to type-2 link and the
    standard (k2-k1)-Harary overlay is used. Otherwise overlay offsets are
    searched until one avoids the base links and the union certifies as
    (k1, k2)-resistant.

    Raises:
        PreconditionError: naming the failing assumption, or when no overlay
            is found.
    """
    n = n1 + n2
    if n1 < 1 or n2 < 1:
        raise PreconditionError(f"need n1 >= 1 and n2 >= 1, got n1={n1}, n2={n2}")
    if k1 > k2:
        raise PreconditionError(f"need k1 <= k2, got k1={k1} > k2={k2}")
    if k1 % 2 != 1:
        raise PreconditionError(f"k1 must be odd, got k1={k1}")
    if not n2 > k2 - k1:
        raise PreconditionError(f"need n2 > k2 - k1, got n2={n2}, k2 - k1={k2 - k1}")
    if k1 + 1 > n - 1:
        raise PreconditionError(f"a (k1+1)-Harary network needs n >= k1 + 2, got n={n}, k1={k1}")

    order = interleaved_order(n1, n2, k1)
    base = harary_edges(order, k1 + 1)
    degree = k2 - k1
    if degree == 0:
        return TwoLayerNetwork.from_edges(n1, n2, nonprotected=base)

    type2 = list(range(n1 + 1, n + 1))
    spaced = n2 * (k1 + 1) <= 2 * n1
    base_set = set(base)
    for i, extra in enumerate(_overlay_candidates(type2, degree)):
        if i >= MAX_OVERLAY_CANDIDATES:
            break
        if base_set.intersection(extra):
            continue
        net = TwoLayerNetwork.from_edges(n1, n2, nonprotected=overlay(base, extra))
        if spaced or is_resistant_mincut(net, k1, k2).resistant:
            return net
    raise PreconditionError(
        f"no type-2 overlay of degree {degree} avoids the base Harary links for "
        f"n1={n1}, n2={n2}, k1={k1}, k2={k2}"
    )


BUILDERS = {
    StrategyKind.S0: lambda prm: build_s0(prm.n1, prm.n2, prm.k1, prm.k2),
    StrategyKind.SN2M1: lambda prm: build_s_n2m1(prm.n1, prm.n2, prm.k1),
    StrategyKind.SNM1: lambda prm: build_s_nm1(prm.n1, prm.n2),
}


def build(kind: StrategyKind, params: DesignParams) -> TwoLayerNetwork:
    return BUILDERS[StrategyKind(kind)](params)


@dataclass(frozen=True)
class DesignResult:
    """A verified design.

    ``strategy`` names the construction used. ``selection`` records how it was
    picked: ``"thresholds"`` (optimality proven, ``optimal_claimed``) or
    ``"fallback"`` (cheapest verified candidate among the three).
    """

    params: DesignParams
    strategy: StrategyKind
    network: TwoLayerNetwork
    cost: Fraction
    optimal_claimed: bool
    verified: bool
    selection: str

    @property
    def p(self) -> int:
        return self.network.p

    @property
    def m(self) -> int:
        return self.network.m

    @property
    def bound(self) -> Fraction:
        prm = self.params
        return lower_bound(prm.n1, prm.n2, prm.k1, prm.k2, min(self.p, prm.n - 1))


def _verified(kind: StrategyKind, params: DesignParams) -> Optional[TwoLayerNetwork]:
    try:
        net = build(kind, params)
    except PreconditionError as exc:
        logger.debug("candidate %s skipped: %s", kind.value, exc)
        return None
    if not is_resistant_mincut(net, params.k1, params.k2).resistant:
        logger.debug("candidate %s failed verification", kind.value)
        return None
    return net


def candidates(params: DesignParams) -> dict[StrategyKind, TwoLayerNetwork]:
    """Every construction that builds and verifies for ``params``."""
    out = {}
    for kind in StrategyKind:
        net = _verified(kind, params)
        if net is not None:
            out[kind] = net
    return out


def design(params: DesignParams) -> DesignResult:
    """Cheapest (k1, k2)-resistant design among the three constructions.

    Under the optimality assumptions (see :func:`optimality_preconditions`)
    the threshold rule picks the strategy and optimality is claimed. Otherwise
    every buildable candidate is verified and the cheapest wins, ties going to
    fewer protected links.
    """
    if not optimality_preconditions(params):
        kind = select_strategy(params)
        net = build(kind, params)
        if not is_resistant_mincut(net, params.k1, params.k2).resistant:
            raise RuntimeError(f"{kind.value} construction failed verification for {params}")
        return DesignResult(params, kind, net, params.cost(net), True, True, "thresholds")

    found = candidates(params)
    if not found:
        raise NoFeasibleCandidate(f"no construction applies to {params}")
    kind, net = min(found.items(), key=lambda kv: (params.cost(kv[1]), kv[1].p))
    return DesignResult(params, kind, net, params.cost(net), False, True, "fallback")


def achieves_bound(result: DesignResult) -> bool:
    prm = result.params
    return result.m == required_links(prm.n1, prm.n2, prm.k1, prm.k2, result.p)
