"""Independent brute-force oracles and random network generators for tests."""

from __future__ import annotations

import itertools
import random

from resistnet.graph import TwoLayerNetwork


def components(n: int, edges) -> list[int]:
    """Component label per node 1..n by plain DFS (no union-find)."""
    adj = {i: [] for i in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    label = [0] * (n + 1)
    cur = 0
    for s in range(1, n + 1):
        if label[s]:
            continue
        cur += 1
        stack = [s]
        label[s] = cur
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not label[y]:
                    label[y] = cur
                    stack.append(y)
    return label


def brute_min_cut(net: TwoLayerNetwork, s: int, t: int, max_size: int):
    """Smallest number of non-protected links separating s and t, or None if
    no set of at most ``max_size`` links does."""
    nonp = sorted(net.nonprotected)
    for size in range(max_size + 1):
        for attack in itertools.combinations(nonp, size):
            keep = set(nonp) - set(attack)
            label = components(net.n, list(net.protected) + list(keep))
            if label[s] != label[t]:
                return size
    return None


def random_network(rng: random.Random, max_n: int = 7, max_np: int = 12) -> TwoLayerNetwork:
    n1 = rng.randint(1, max_n - 1)
    n2 = rng.randint(1, max_n - n1)
    n = n1 + n2
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    n_np = rng.randint(0, min(max_np, len(pairs)))
    n_p = rng.randint(0, min(n - 1, len(pairs) - n_np))
    nonp = pairs[:n_np]
    prot = pairs[n_np:n_np + n_p]
    return TwoLayerNetwork.from_edges(n1, n2, prot, nonp)
