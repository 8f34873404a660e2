"""Two-layer network model, protected-link contraction and non-protected cuts.

Nodes are numbered ``1..n`` with the ``n1`` type-1 nodes first, so node ``i``
is type 1 iff ``i <= n1``. Every edge is either protected (cannot be attacked,
never fails) or non-protected.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Optional, Union

Edge = tuple[int, int]
CutValue = Union[int, float]  # int, or math.inf


class LinkKind(str, enum.Enum):
    PROTECTED = "P"
    NON_PROTECTED = "NP"


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop on node {u}")
    return (u, v) if u < v else (v, u)


class UnionFind:
    """Disjoint sets over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [1] * size
        self.components = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.rank[ra] += self.rank[rb]
        self.components -= 1
        return True


@dataclass(frozen=True)
class TwoLayerNetwork:
    """Immutable two-layer network with protected and non-protected links.

    Edges are stored normalized as ``(u, v)`` with ``u < v``. A pair may carry
    at most one link, of one kind.
    """

    n1: int
    n2: int
    protected: frozenset[Edge] = frozenset()
    nonprotected: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError(f"need n1 >= 1 and n2 >= 1, got n1={self.n1}, n2={self.n2}")
        n = self.n1 + self.n2
        prot = frozenset(norm_edge(*e) for e in self.protected)
        nonp = frozenset(norm_edge(*e) for e in self.nonprotected)
        for u, v in prot | nonp:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [1, {n}]")
        both = prot & nonp
        if both:
            raise ValueError(f"pairs carry both a protected and a non-protected link: {sorted(both)}")
        object.__setattr__(self, "protected", prot)
        object.__setattr__(self, "nonprotected", nonp)

    @classmethod
    def from_edges(
        cls,
        n1: int,
        n2: int,
        protected: Iterable[Edge] = (),
        nonprotected: Iterable[Edge] = (),
    ) -> TwoLayerNetwork:
        """Build a network, rejecting duplicate pairs within one kind."""
        prot = [norm_edge(*e) for e in protected]
        nonp = [norm_edge(*e) for e in nonprotected]
        for name, edges in (("protected", prot), ("non-protected", nonp)):
            if len(set(edges)) != len(edges):
                raise ValueError(f"duplicate {name} edge")
        return cls(n1, n2, frozenset(prot), frozenset(nonp))

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def p(self) -> int:
        return len(self.protected)

    @property
    def m(self) -> int:
        return len(self.nonprotected)

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    @property
    def type1_nodes(self) -> range:
        return range(1, self.n1 + 1)

    @property
    def type2_nodes(self) -> range:
        return range(self.n1 + 1, self.n + 1)

    def node_type(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"node {i} outside [1, {self.n}]")
        return 1 if i <= self.n1 else 2

    def edges(self) -> list[tuple[int, int, LinkKind]]:
        """All links sorted by endpoint pair."""
        out = [(u, v, LinkKind.PROTECTED) for u, v in self.protected]
        out += [(u, v, LinkKind.NON_PROTECTED) for u, v in self.nonprotected]
        return sorted(out)

    def kind_of(self, u: int, v: int) -> Optional[LinkKind]:
        e = norm_edge(u, v)
        if e in self.protected:
            return LinkKind.PROTECTED
        if e in self.nonprotected:
            return LinkKind.NON_PROTECTED
        return None

    def without_nonprotected(self, removed: Iterable[Edge]) -> TwoLayerNetwork:
        removed = _check_removable(self, removed)
        return TwoLayerNetwork(self.n1, self.n2, self.protected, self.nonprotected - removed)


@dataclass(frozen=True)
class ContractedNetwork:
    """Quotient of a network after contracting every protected link.

    ``blocks`` are sorted tuples of original nodes, ordered by smallest member;
    ``quotient_edges`` are deduplicated pairs of block indices ``(a, b)``, a < b.
    """

    blocks: tuple[tuple[int, ...], ...]
    quotient_edges: frozenset[tuple[int, int]]
    nu0: int
    nu1: int
    nu2: int
    block_of: dict[int, int] = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.blocks)


def _protected_components(net: TwoLayerNetwork) -> UnionFind:
    uf = UnionFind(net.n + 1)
    for u, v in net.protected:
        uf.union(u, v)
    return uf


def contract(net: TwoLayerNetwork) -> ContractedNetwork:
    uf = _protected_components(net)
    groups: dict[int, list[int]] = {}
    for i in net.nodes:
        groups.setdefault(uf.find(i), []).append(i)
    blocks = tuple(sorted(tuple(g) for g in groups.values()))
    block_of = {i: b for b, members in enumerate(blocks) for i in members}

    nu0 = nu1 = nu2 = 0
    for members in blocks:
        has1 = members[0] <= net.n1
        has2 = members[-1] > net.n1
        if has1 and has2:
            nu0 += 1
        elif has1:
            nu1 += 1
        else:
            nu2 += 1

    quotient = set()
    for u, v in net.nonprotected:
        a, b = block_of[u], block_of[v]
        if a != b:
            quotient.add((a, b) if a < b else (b, a))
    return ContractedNetwork(blocks, frozenset(quotient), nu0, nu1, nu2, block_of)


def _check_removable(net: TwoLayerNetwork, removed: Iterable[Edge]) -> frozenset[Edge]:
    removed = frozenset(norm_edge(*e) for e in removed)
    bad = removed - net.nonprotected
    if bad:
        prot = sorted(bad & net.protected)
        if prot:
            raise ValueError(f"protected links cannot be removed: {prot}")
        raise ValueError(f"removed edges not in the network: {sorted(bad)}")
    return removed


def is_connected(
    net: TwoLayerNetwork,
    removed: Iterable[Edge] = (),
    restrict_to: Optional[Iterable[int]] = None,
) -> bool:
    """True iff all nodes of ``restrict_to`` (default: every node) stay mutually
    reachable once the non-protected links in ``removed`` are deleted.

    Paths may pass through any node, not only those in ``restrict_to``.
    """
    removed = _check_removable(net, removed)
    uf = _protected_components(net)
    for u, v in net.nonprotected:
        if (u, v) not in removed:
            uf.union(u, v)
    targets = list(net.nodes if restrict_to is None else restrict_to)
    if len(targets) <= 1:
        return True
    root = uf.find(targets[0])
    return all(uf.find(t) == root for t in targets[1:])


class _CutSolver:
    """Unit-capacity max-flow on the contracted multigraph.

    Protected links are merged away, so every remaining arc is a single
    non-protected link with capacity one in either direction.
    """

    def __init__(self, net: TwoLayerNetwork):
        self.net = net
        self.contracted = contract(net)
        block_of = self.contracted.block_of
        self.arcs: list[tuple[int, int, Edge]] = []
        self.incident: list[list[int]] = [[] for _ in self.contracted.blocks]
        for e in sorted(net.nonprotected):
            a, b = block_of[e[0]], block_of[e[1]]
            if a == b:
                continue
            idx = len(self.arcs)
            self.arcs.append((a, b, e))
            self.incident[a].append(idx)
            self.incident[b].append(idx)

    def cut(self, s: int, t: int, limit: Optional[int] = None) -> tuple[CutValue, frozenset[Edge]]:
        """Return (value, cut edges) separating nodes ``s`` and ``t``.

        With ``limit`` set, augmentation stops once the flow exceeds it and the
        returned value is only known to be ``> limit`` (edges then empty).
        """
        if s == t:
            raise ValueError("s and t must differ")
        bs = self.contracted.block_of[s]
        bt = self.contracted.block_of[t]
        if bs == bt:
            return math.inf, frozenset()
        flow = [0] * len(self.arcs)  # +1: a->b, -1: b->a
        value = 0
        while True:
            pred = self._augmenting_path(bs, bt, flow)
            if pred is None:
                break
            x = bt
            while x != bs:
                idx = pred[x]
                a, b, _ = self.arcs[idx]
                if x == b:
                    flow[idx] += 1
                    x = a
                else:
                    flow[idx] -= 1
                    x = b
            value += 1
            if limit is not None and value > limit:
                return value, frozenset()
        reach = self._reachable(bs, flow)
        cut = frozenset(e for a, b, e in self.arcs if (a in reach) != (b in reach))
        return value, cut

    def _augmenting_path(self, src: int, dst: int, flow: list[int]) -> Optional[dict[int, int]]:
        pred: dict[int, int] = {src: -1}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for idx in self.incident[x]:
                a, b, _ = self.arcs[idx]
                if x == a and flow[idx] < 1:
                    y = b
                elif x == b and flow[idx] > -1:
                    y = a
                else:
                    continue
                if y not in pred:
                    pred[y] = idx
                    if y == dst:
                        return pred
                    queue.append(y)
        return None

    def _reachable(self, src: int, flow: list[int]) -> set[int]:
        seen = {src}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for idx in self.incident[x]:
                a, b, _ = self.arcs[idx]
                if x == a and flow[idx] < 1:
                    y = b
                elif x == b and flow[idx] > -1:
                    y = a
                else:
                    continue
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen


def min_cut_nonprotected(net: TwoLayerNetwork, s: int, t: int) -> CutValue:
    """Fewest non-protected links whose removal separates ``s`` from ``t``.

    Returns ``math.inf`` when no such set exists, i.e. when ``s`` and ``t`` are
    joined by protected links.
    """
    return _CutSolver(net).cut(s, t)[0]


def min_cut_edges(net: TwoLayerNetwork, s: int, t: int) -> tuple[CutValue, frozenset[Edge]]:
    return _CutSolver(net).cut(s, t)


def edge_connectivity(net: TwoLayerNetwork, nodes: Optional[Iterable[int]] = None) -> CutValue:
    """Minimum non-protected cut over all pairs drawn from ``nodes``.

    One anchor suffices: any cut separating two nodes separates the anchor from
    one of them.
    """
    nodes = list(net.nodes if nodes is None else nodes)
    if len(nodes) < 2:
        return math.inf
    solver = _CutSolver(net)
    anchor = nodes[0]
    return min(solver.cut(anchor, v)[0] for v in nodes[1:])
