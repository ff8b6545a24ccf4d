"""Nice perfect matchings and edge-involutions.

A perfect matching ``M`` is nice when for every two of its edges ``xy`` and
``uv``: ``xu`` is an edge iff ``yv`` is, and ``xv`` is an edge iff ``yu`` is.
Equivalently its partner map is an automorphism, i.e. an edge-involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InvalidInput, NotNice
from .graph import Graph, bits, induced_subgraph
from .matchings import PerfectMatching, check_matching, count_alternating_4cycles
from .morphisms import find_isomorphism, is_automorphism
from .unionfind import UnionFind


@dataclass(frozen=True)
class Involution:
    alpha: tuple[int, ...]

    def validate(self, G: Graph) -> None:
        a = self.alpha
        if len(a) != G.n:
            raise InvalidInput("involution size differs from the graph")
        for v, w in enumerate(a):
            if not 0 <= w < G.n or a[w] != v or w == v:
                raise InvalidInput(f"not a fixed-point-free involution at {v}")
            if not G.has_edge(v, w):
                raise InvalidInput(f"{v} is not adjacent to its image {w}")
        if not is_automorphism(G, a):
            raise InvalidInput("map does not preserve adjacency")


@dataclass(frozen=True)
class NiceSet:
    matchings: tuple[PerfectMatching, ...]

    @property
    def count(self) -> int:
        return len(self.matchings)

    def __len__(self) -> int:
        return len(self.matchings)

    def __iter__(self):
        return iter(self.matchings)


def is_nice(G: Graph, M: PerfectMatching) -> bool:
    check_matching(G, M)
    has = G.has_edge
    medges = M.edges
    for i, (x, y) in enumerate(medges):
        for u, v in medges[i + 1:]:
            if has(x, u) != has(y, v) or has(x, v) != has(y, u):
                return False
    return True


def involution_of(G: Graph, M: PerfectMatching) -> Involution:
    if not is_nice(G, M):
        raise NotNice("partner map of a non-nice matching is not an automorphism")
    inv = Involution(M.partner)
    inv.validate(G)
    return inv


def matching_of(G: Graph, alpha) -> PerfectMatching:
    if not isinstance(alpha, Involution):
        alpha = Involution(tuple(alpha))
    alpha.validate(G)
    return PerfectMatching(alpha.alpha)


def _component_involutions(G: Graph, comp: list[int]) -> list[dict[int, int]]:
    """All edge-involutions of the component ``comp``, as vertex->image maps."""
    adj = G.adj
    alpha = {}
    state = {"dom": 0}
    found = []
    comp_mask = sum(1 << v for v in comp)

    def fits(v, w):
        # alpha(N(v) & assigned) must equal N(w) & assigned; the mirrored
        # condition for w follows because alpha is an involution
        dom = state["dom"]
        img = 0
        for x in bits(adj[v] & dom):
            img |= 1 << alpha[x]
        return img == adj[w] & dom

    def rec(free):
        if not free:
            found.append(dict(alpha))
            return
        v = (free & -free).bit_length() - 1
        dv = G.degree(v)
        for w in bits(adj[v] & free & ~(1 << v)):
            if G.degree(w) != dv or not fits(v, w):
                continue
            alpha[v], alpha[w] = w, v
            state["dom"] |= 1 << v | 1 << w
            rec(free & ~(1 << v) & ~(1 << w))
            state["dom"] &= ~(1 << v | 1 << w)
            del alpha[v], alpha[w]

    rec(comp_mask)
    return found


def edge_involutions(G: Graph) -> list[Involution]:
    """All edge-involutions, combined componentwise, in canonical order."""
    per_comp = [_component_involutions(G, comp) for comp in G.components()]
    out = []
    for combo in product(*per_comp):
        alpha = [0] * G.n
        for part in combo:
            for v, w in part.items():
                alpha[v] = w
        out.append(Involution(tuple(alpha)))
    return sorted(out, key=lambda a: a.alpha)


def enumerate_nice(G: Graph) -> NiceSet:
    return NiceSet(tuple(PerfectMatching(a.alpha) for a in edge_involutions(G)))


def _invariant(G: Graph, M: PerfectMatching):
    rest = G.remove_edges(M.edges)
    return (
        sorted(len(c) for c in rest.components()),
        count_alternating_4cycles(G, M),
    )


def are_equivalent(G: Graph, M1: PerfectMatching, M2: PerfectMatching) -> tuple[int, ...] | None:
    """An automorphism carrying ``M1`` onto ``M2``, or ``None``."""
    check_matching(G, M1)
    check_matching(G, M2)
    if _invariant(G, M1) != _invariant(G, M2):
        return None
    return find_isomorphism(G, G, M1.partner, M2.partner)


def equivalence_classes(G: Graph, S) -> list[list[int]]:
    """Partition of the indices of ``S`` into equivalence classes.

    Each matching is compared with one representative per existing class;
    automorphisms form a group, so that suffices for the closure.
    """
    S = list(S)
    uf = UnionFind(len(S))
    reps: list[int] = []
    for i, M in enumerate(S):
        for r in reps:
            if are_equivalent(G, S[r], M) is not None:
                uf.union(r, i)
                break
        else:
            reps.append(i)
    return uf.groups()


def succession_check(G: Graph, M: PerfectMatching, S) -> bool:
    """Whether ``M`` restricted to ``G[S]`` is a nice matching of ``G[S]``."""
    check_matching(G, M)
    S = set(S)
    for v in S:
        if M.partner[v] not in S:
            raise InvalidInput(f"matching edge at {v} leaves the vertex set")
    H, remap = induced_subgraph(G, S)
    pos = {v: i for i, v in enumerate(remap)}
    sub = PerfectMatching.from_edges(H.n, ((pos[u], pos[v]) for u, v in M.edges if u in S))
    return is_nice(H, sub)
