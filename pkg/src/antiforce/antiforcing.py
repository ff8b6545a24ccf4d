"""Anti-forcing numbers of perfect matchings.

``min_antiforcing`` is an exact lazy hitting-set search: an edge set is
anti-forcing for ``M`` exactly when it meets every M-alternating cycle, so the
search repeatedly looks for a surviving alternating cycle and branches on
which of its non-matching edges to delete. Alternating 4-cycles in the
remaining graph pairwise share no non-matching edge, so their count is an
admissible lower bound on the number of further deletions.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from collections import Counter

from . import kernels
from .errors import InvalidInput, NoPerfectMatching
from .graph import Graph, canon
from .matchings import (
    PerfectMatching,
    check_matching,
    count_alternating_4cycles,
    enumerate_perfect_matchings,
    free_masks,
    has_unique_pm,
)


@dataclass(frozen=True)
class AfResult:
    value: int
    witness: tuple[tuple[int, int], ...]
    lower_bound_c4: int
    nodes_explored: int


@dataclass(frozen=True)
class BoundsReport:
    cyclomatic: int
    quarter: Fraction
    degree_parity_obstruction: bool


def bounds(G: Graph) -> BoundsReport:
    """Cyclomatic number, the ``(2e - v)/4`` bound and the degree-parity flag.

    The cyclomatic number is ``e - v + c`` with ``c`` components, which is
    ``e - v + 1`` for connected graphs.
    """
    c = len(G.components()) if G.n else 0
    counts = Counter(G.degrees())
    return BoundsReport(
        cyclomatic=G.e - G.n + c,
        quarter=Fraction(2 * G.e - G.n, 4),
        degree_parity_obstruction=any(k % 2 for k in counts.values()),
    )


def _edge_list(G: Graph, M: PerfectMatching, S) -> list[tuple[int, int]]:
    out = []
    for e in S:
        e = canon(*e)
        if e in M:
            raise InvalidInput(f"edge {e} belongs to the matching")
        if e not in G:
            raise InvalidInput(f"{e} is not an edge")
        out.append(e)
    return out


def is_antiforcing_set(G: Graph, M: PerfectMatching, S) -> bool:
    return has_unique_pm(G, M, _edge_list(G, M, S))


def minimalize_antiforcing_set(G: Graph, M: PerfectMatching, S) -> frozenset:
    """Drop edges of ``S`` in ascending order while it stays anti-forcing."""
    keep = sorted(set(_edge_list(G, M, S)))
    if not has_unique_pm(G, M, keep):
        raise InvalidInput("input set is not anti-forcing")
    for e in list(keep):
        trial = [f for f in keep if f != e]
        if has_unique_pm(G, M, trial):
            keep = trial
    return frozenset(keep)


def omega_antiforcing_set(G: Graph, M: PerfectMatching, A=None, omega=None) -> frozenset:
    """The set ``E_A^w + E(A)`` built from a side selection and an edge order.

    ``A`` holds one endpoint of every matching edge (default: the smaller
    one). ``omega`` maps each matching edge to a distinct rank ``1..|M|``
    (default: canonical edge order). A non-matching edge is kept when both ends
    lie in ``A``, or when it joins ``x`` in ``A`` to ``y`` outside ``A`` with
    ``omega(x) > omega(y)``.
    """
    check_matching(G, M)
    medges = M.edges
    A = {u for u, _ in medges} if A is None else set(A)
    for u, v in medges:
        if (u in A) == (v in A):
            raise InvalidInput(f"side selection must contain exactly one end of ({u}, {v})")
    if len(A) != len(medges):
        raise InvalidInput("side selection has vertices outside one-per-edge")
    if omega is None:
        omega = {e: i + 1 for i, e in enumerate(medges)}
    else:
        omega = {canon(*e): w for e, w in dict(omega).items()}
        if set(omega) != set(medges) or sorted(omega.values()) != list(range(1, len(medges) + 1)):
            raise InvalidInput("omega must be a bijection from M onto 1..|M|")
    rank = [0] * G.n
    for (u, v), w in omega.items():
        rank[u] = rank[v] = w
    S = set()
    for x, y in G.edges:
        if M.partner[x] == y:
            continue
        if x in A and y in A:
            S.add((x, y))
        elif x in A or y in A:
            a, b = (x, y) if x in A else (y, x)
            if rank[a] > rank[b]:
                S.add((x, y))
    S = frozenset(S)
    assert has_unique_pm(G, M, S), "omega construction must be anti-forcing"
    return S


def _shortest_cycle(n, partner, avail):
    probe = kernels.alternating_cycle(n, partner, avail, n // 2)
    if probe is None:
        return None
    for k in range(2, len(probe) // 2 + 1):
        cyc = kernels.alternating_cycle(n, partner, avail, k)
        if cyc is not None:
            return cyc
    return probe


class _HittingSearch:
    """Branch-and-bound over the non-matching edges of surviving cycles."""

    def __init__(self, G: Graph, M: PerfectMatching):
        self.G = G
        self.M = M
        self.n = G.n
        self.p = M.partner
        self.base = free_masks(G, M)
        self.nodes = 0

    def _avail(self, removed):
        avail = list(self.base)
        for u, v in removed:
            avail[u] &= ~(1 << v)
            avail[v] &= ~(1 << u)
        return avail

    def _only(self, edges):
        masks = [0] * self.n
        for u, v in edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def run(self, forced, excluded, cap, first_only=False):
        """Smallest hitting set below ``cap`` containing ``forced``, avoiding
        ``excluded``; with ``first_only`` any such set. ``None`` if none."""
        self.cap = cap
        self.best = None
        self.first_only = first_only
        self._rec(list(forced), set(excluded))
        return self.best

    def _rec(self, S, X):
        self.nodes += 1
        n, p = self.n, self.p
        avail = self._avail(S)
        lb = kernels.count_alternating_4cycles(n, p, avail)
        if len(S) + lb >= self.cap:
            return False
        if X and kernels.alternating_cycle(n, p, self._only(X), n // 2) is not None:
            # a cycle using only excluded edges can never be hit
            return False
        cyc = _shortest_cycle(n, p, avail)
        if cyc is None:
            self.best = tuple(sorted(S))
            self.cap = len(S)
            return self.first_only
        if len(S) + 1 >= self.cap:
            return False
        k = len(cyc)
        options = sorted(canon(cyc[i], cyc[(i + 1) % k]) for i in range(1, k, 2))
        added = []
        stop = False
        for e in options:
            if e in X:
                continue
            S.append(e)
            stop = self._rec(S, X)
            S.pop()
            if stop:
                break
            X.add(e)
            added.append(e)
        X.difference_update(added)
        return stop


def min_antiforcing(G: Graph, M: PerfectMatching, lexmin: bool = True) -> AfResult:
    """Exact ``af(G, M)`` with a witness.

    With ``lexmin`` the witness is the lexicographically least optimal set
    (as a sorted edge tuple); otherwise it is the first optimum found.
    """
    check_matching(G, M)
    lb = count_alternating_4cycles(G, M)
    free = [e for e in G.edges if e not in M]
    incumbent = min(
        sorted(omega_antiforcing_set(G, M)),
        sorted(minimalize_antiforcing_set(G, M, free)),
        key=lambda s: (len(s), s),
    )
    search = _HittingSearch(G, M)
    if len(incumbent) > lb:
        found = search.run((), (), len(incumbent))
        if found is not None:
            incumbent = list(found)
    value = len(incumbent)
    witness = tuple(incumbent)
    if lexmin and value:
        chosen, banned = [], set()
        for e in free:
            if len(chosen) == value:
                break
            if search.run(chosen + [e], banned, value + 1, first_only=True) is not None:
                chosen.append(e)
            else:
                banned.add(e)
        witness = tuple(chosen)
    assert len(witness) == value and has_unique_pm(G, M, witness)
    return AfResult(value, witness, lb, search.nodes)


def _af_value(args):
    G, M = args
    return min_antiforcing(G, M, lexmin=False).value


def max_antiforcing(G: Graph, workers: int = 1) -> tuple[int, PerfectMatching]:
    """``Af(G)`` and the first maximising matching in canonical order."""
    pms = enumerate_perfect_matchings(G)
    if not pms:
        raise NoPerfectMatching("graph has no perfect matching")
    if workers > 1 and len(pms) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_af_value, [(G, M) for M in pms]))
    else:
        values = [_af_value((G, M)) for M in pms]
    best = max(values)
    return best, pms[values.index(best)]
