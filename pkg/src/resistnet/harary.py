"""Harary networks: minimum-edge graphs of a given edge connectivity.

The construction is circulant over *positions* of a caller-supplied node
sequence, so the same routine lays a Harary network over any ordering of
arbitrary node ids.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .graph import Edge, norm_edge


class DuplicateEdge(ValueError):
    """Two edge sets that were expected to be disjoint share a pair."""


def harary_edge_count(n: int, degree: int) -> int:
    return -(-degree * n // 2)


def harary_edges(sequence: Sequence[int], degree: int) -> list[Edge]:
    """Edges of the ``degree``-Harary network over ``sequence``.

    For ``degree = 2r`` position ``i`` is joined to ``i +- 1 .. i +- r`` (mod n).
    For odd degree ``2r + 1`` the circulant is completed by diameter chords
    ``i -- i + n/2`` when n is even, and by ``i -- i + ceil(n/2)`` for
    ``0 <= i <= n // 2`` when n is odd. Exactly ``ceil(degree * n / 2)`` edges
    are returned. For ``degree >= 2`` the result has edge connectivity
    ``degree``; a degree-1 network is a matching and only connected for n <= 3.

    Raises:
        ValueError: if the sequence has fewer than 2 or repeated nodes, or
            ``degree`` is outside ``[1, n - 1]``.
    """
    seq = list(sequence)
    n = len(seq)
    if n < 2:
        raise ValueError(f"Harary network needs at least 2 nodes, got {n}")
    if len(set(seq)) != n:
        raise ValueError("sequence contains repeated nodes")
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if degree >= n:
        raise ValueError(f"degree {degree} needs more than {n} nodes (a complete graph has degree {n - 1})")

    half, odd = divmod(degree, 2)
    pairs: list[tuple[int, int]] = []
    for offset in range(1, half + 1):
        for i in range(n):
            pairs.append((i, (i + offset) % n))
    if odd:
        if n % 2 == 0:
            pairs.extend((i, i + n // 2) for i in range(n // 2))
        else:
            step = (n + 1) // 2
            pairs.extend((i, (i + step) % n) for i in range(n // 2 + 1))

    edges = []
    seen = set()
    for a, b in pairs:
        e = norm_edge(seq[a], seq[b])
        if e not in seen:
            seen.add(e)
            edges.append(e)
    assert len(edges) == harary_edge_count(n, degree), (n, degree, len(edges))
    return edges


def overlay(base: Iterable[Edge], extra: Iterable[Edge]) -> set[Edge]:
    """Union of two edge sets that must not share a pair."""
    base = {norm_edge(*e) for e in base}
    extra = {norm_edge(*e) for e in extra}
    common = base & extra
    if common:
        raise DuplicateEdge(f"edge sets overlap on {sorted(common)}")
    return base | extra
