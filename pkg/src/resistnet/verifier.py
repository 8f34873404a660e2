"""Exact (k1, k2)-resistance checks.

Two independent routes: a min-cut certificate (Menger) and an exhaustive
attacker that tries every set of non-protected links of the budgeted size.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .graph import Edge, TwoLayerNetwork, UnionFind, _CutSolver

DEFAULT_BUDGET = 20_000_000


class BudgetExceeded(RuntimeError):
    """Exhaustive enumeration would exceed the configured subset budget."""


class Method(str, enum.Enum):
    MINCUT = "mincut"
    BRUTE_FORCE = "brute"


@dataclass(frozen=True)
class ResistanceReport:
    resistant: bool
    condition_a_ok: bool
    condition_b_ok: bool
    method: Method
    witness_attack: Optional[tuple[Edge, ...]] = None
    violated: Optional[str] = None  # "a" or "b"

    def to_dict(self) -> dict:
        return {
            "resistant": self.resistant,
            "condition_a_ok": self.condition_a_ok,
            "condition_b_ok": self.condition_b_ok,
            "method": self.method.value,
            "violated": self.violated,
            "witness_attack": None if self.witness_attack is None else [list(e) for e in self.witness_attack],
        }


def _weakest_cut(solver: _CutSolver, nodes: list[int], k: int) -> Optional[frozenset[Edge]]:
    """Smallest cut of size <= k separating two of ``nodes``, else None."""
    if len(nodes) < 2:
        return None
    anchor = nodes[0]
    best_val, best_cut = math.inf, None
    for v in nodes[1:]:
        val, cut = solver.cut(anchor, v, limit=k)
        if val <= k and val < best_val:
            best_val, best_cut = val, cut
            if val == 0:
                break
    return best_cut


def is_resistant_mincut(net: TwoLayerNetwork, k1: int, k2: int) -> ResistanceReport:
    """Decide resistance from pairwise non-protected min cuts.

    Condition (a) needs every pair of nodes at cut distance > k1, condition (b)
    every pair of type-2 nodes at cut distance > k2; paths may cross either
    layer. A violated condition comes with a minimum cut as witness.
    """
    solver = _CutSolver(net)
    cut_a = _weakest_cut(solver, list(net.nodes), k1)
    cut_b = _weakest_cut(solver, list(net.type2_nodes), k2)
    a_ok, b_ok = cut_a is None, cut_b is None
    witness, violated = None, None
    if not a_ok:
        witness, violated = tuple(sorted(cut_a)), "a"
    elif not b_ok:
        witness, violated = tuple(sorted(cut_b)), "b"
    return ResistanceReport(a_ok and b_ok, a_ok, b_ok, Method.MINCUT, witness, violated)


def _splits(base: UnionFind, keep: list[Edge], targets: list[int]) -> bool:
    uf = UnionFind(len(base.parent))
    uf.parent = list(base.parent)
    uf.rank = list(base.rank)
    for u, v in keep:
        uf.union(u, v)
    root = uf.find(targets[0])
    return any(uf.find(t) != root for t in targets[1:])


def _protected_base(net: TwoLayerNetwork) -> UnionFind:
    uf = UnionFind(net.n + 1)
    for u, v in net.protected:
        uf.union(u, v)
    return uf


def _check_budget(m: int, k: int, budget: int) -> None:
    if math.comb(m, min(k, m)) > budget:
        raise BudgetExceeded(f"C({m}, {min(k, m)}) = {math.comb(m, min(k, m))} attack sets exceed budget {budget}")


def _first_violation(
    net: TwoLayerNetwork, base: UnionFind, edges: list[Edge], size: int, targets: list[int]
) -> Optional[tuple[Edge, ...]]:
    if len(targets) < 2:
        return None
    for attack in itertools.combinations(range(len(edges)), size):
        hit = set(attack)
        keep = [e for i, e in enumerate(edges) if i not in hit]
        if _splits(base, keep, targets):
            # shrink to an inclusion-minimal attack
            chosen = [edges[i] for i in attack]
            for e in list(chosen):
                trial = [x for x in chosen if x != e]
                trial_set = set(trial)
                if _splits(base, [x for x in edges if x not in trial_set], targets):
                    chosen = trial
            return tuple(sorted(chosen))
    return None


def is_resistant_bruteforce(
    net: TwoLayerNetwork, k1: int, k2: int, budget: int = DEFAULT_BUDGET
) -> ResistanceReport:
    """Decide resistance by trying every attack of the budgeted size.

    Only attacks of exactly ``min(k, |E_NP|)`` links are tried: putting links
    back never disconnects anything.

    Raises:
        BudgetExceeded: if either enumeration exceeds ``budget`` subsets.
    """
    edges = sorted(net.nonprotected)
    m = len(edges)
    _check_budget(m, k1, budget)
    _check_budget(m, k2, budget)
    base = _protected_base(net)
    wa = _first_violation(net, base, edges, min(k1, m), list(net.nodes))
    wb = _first_violation(net, base, edges, min(k2, m), list(net.type2_nodes))
    a_ok, b_ok = wa is None, wb is None
    witness, violated = None, None
    if not a_ok:
        witness, violated = wa, "a"
    elif not b_ok:
        witness, violated = wb, "b"
    return ResistanceReport(a_ok and b_ok, a_ok, b_ok, Method.BRUTE_FORCE, witness, violated)


def is_resistant(net: TwoLayerNetwork, k1: int, k2: int, method: Method | str = Method.MINCUT) -> ResistanceReport:
    method = Method(method)
    if method is Method.MINCUT:
        return is_resistant_mincut(net, k1, k2)
    return is_resistant_bruteforce(net, k1, k2)


def worst_attack(net: TwoLayerNetwork, k: int, budget: int = DEFAULT_BUDGET) -> Optional[tuple[Edge, ...]]:
    """A smallest set of at most ``k`` non-protected links whose removal
    disconnects the network, or None if no such set exists.

    An already disconnected network yields the empty attack.
    """
    edges = sorted(net.nonprotected)
    m = len(edges)
    if sum(math.comb(m, s) for s in range(min(k, m) + 1)) > budget:
        raise BudgetExceeded(f"attacks of size <= {k} on {m} links exceed budget {budget}")
    base = _protected_base(net)
    targets = list(net.nodes)
    for size in range(min(k, m) + 1):
        for attack in itertools.combinations(edges, size):
            hit = set(attack)
            if _splits(base, [e for e in edges if e not in hit], targets):
                return attack
    return None
