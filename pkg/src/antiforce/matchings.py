"""Perfect matchings and M-alternating cycles."""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

from . import kernels
from .errors import FormatError, InvalidInput
from .graph import Graph, canon


@dataclass(frozen=True, order=True)
class PerfectMatching:
    """A perfect matching stored as its partner map.

    Ordering compares partner tuples, which coincides with the order in which
    ``enumerate_perfect_matchings`` produces matchings.
    """

    partner: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> PerfectMatching:
        partner = [-1] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"bad matching edge ({u}, {v})")
            if partner[u] >= 0 or partner[v] >= 0:
                raise InvalidInput(f"vertex covered twice at edge ({u}, {v})")
            partner[u], partner[v] = v, u
        if -1 in partner:
            raise InvalidInput(f"vertex {partner.index(-1)} is not covered")
        return cls(tuple(partner))

    @property
    def n(self) -> int:
        return len(self.partner)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, w) for v, w in enumerate(self.partner) if v < w)

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def __len__(self) -> int:
        return len(self.partner) // 2

    def __contains__(self, e) -> bool:
        u, v = e
        return self.partner[u] == v

    def mapped(self, perm) -> PerfectMatching:
        """Image of the matching under the vertex map ``v -> perm[v]``."""
        return PerfectMatching.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class AlternatingCycle:
    """Closed vertex sequence ``v0 v1 ... v(2k-1)``; ``v0 v1`` is a matching edge."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [canon(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    @property
    def matching_edges(self) -> list[tuple[int, int]]:
        return self.edges[0::2]

    @property
    def free_edges(self) -> list[tuple[int, int]]:
        """The non-matching edges, in traversal order."""
        return self.edges[1::2]


def check_matching(G: Graph, M: PerfectMatching) -> None:
    if M.n != G.n:
        raise InvalidInput(f"matching covers {M.n} vertices, graph has {G.n}")
    for v, w in enumerate(M.partner):
        if not (0 <= w < G.n) or w == v or M.partner[w] != v:
            raise InvalidInput(f"partner map is not a fixed-point-free involution at {v}")
        if not G.has_edge(v, w):
            raise InvalidInput(f"matching pair ({v}, {w}) is not an edge")


def _masks(n, edges) -> list[int]:
    masks = [0] * n
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def free_masks(G: Graph, M: PerfectMatching, removed=()) -> list[int]:
    """Per-vertex bitsets of non-matching neighbours left after ``removed``."""
    rm = _masks(G.n, removed)
    p = M.partner
    return [G.adj[v] & ~(1 << p[v]) & ~rm[v] for v in range(G.n)]


def enumerate_perfect_matchings(G: Graph, limit: int = 0) -> list[PerfectMatching]:
    raw = kernels.perfect_matchings(G.n, G.adj, (1 << G.n) - 1, limit)
    return [PerfectMatching(p) for p in raw]


def has_perfect_matching(G: Graph) -> bool:
    return bool(kernels.perfect_matchings(G.n, G.adj, (1 << G.n) - 1, 1))


def pm_containing_edge(G: Graph, e: tuple[int, int]) -> PerfectMatching | None:
    u, v = e
    if (u, v) not in G:
        raise InvalidInput(f"({u}, {v}) is not an edge")
    alive = ((1 << G.n) - 1) & ~(1 << u) & ~(1 << v)
    found = kernels.perfect_matchings(G.n, G.adj, alive, 1)
    if not found:
        return None
    partner = list(found[0])
    partner[u], partner[v] = v, u
    return PerfectMatching(tuple(partner))


def _check_forbidden(M: PerfectMatching, forbidden) -> list[tuple[int, int]]:
    out = []
    for e in forbidden:
        e = canon(*e)
        if e in M:
            raise InvalidInput(f"edge {e} belongs to the matching")
        out.append(e)
    return out


def find_alternating_cycle(G: Graph, M: PerfectMatching, forbidden=()) -> AlternatingCycle | None:
    """A shortest M-alternating cycle of ``G - forbidden``, or ``None``.

    Among shortest cycles the lexicographically least canonical sequence
    (least vertex first, matching edge first) is returned.
    """
    check_matching(G, M)
    forbidden = _check_forbidden(M, forbidden)
    avail = free_masks(G, M, forbidden)
    n, p = G.n, M.partner
    top = n // 2
    probe = kernels.alternating_cycle(n, p, avail, top)
    if probe is None:
        return None
    for k in range(2, len(probe) // 2 + 1):
        cyc = kernels.alternating_cycle(n, p, avail, k)
        if cyc is not None:
            return AlternatingCycle(tuple(cyc))
    raise AssertionError("unreachable: deepening must find the probed cycle")


def has_unique_pm(G: Graph, M: PerfectMatching, removed=()) -> bool:
    """Whether ``M`` is the only perfect matching of ``G - removed``."""
    check_matching(G, M)
    removed = _check_forbidden(M, removed)
    for e in removed:
        if e not in G:
            raise InvalidInput(f"removed edge {e} is not in the graph")
    avail = free_masks(G, M, removed)
    return kernels.alternating_cycle(G.n, M.partner, avail, G.n // 2) is None


def count_alternating_4cycles(G: Graph, M: PerfectMatching, removed=()) -> int:
    avail = free_masks(G, M, removed)
    return kernels.count_alternating_4cycles(G.n, M.partner, avail)


def symmetric_difference_cycles(M1: PerfectMatching, M2: PerfectMatching) -> list[AlternatingCycle]:
    """The cycles making up ``M1 xor M2``, each started on an ``M1`` edge."""
    seen = set()
    out = []
    for v in range(M1.n):
        if v in seen or M1.partner[v] == M2.partner[v]:
            continue
        seq = []
        x = v
        while True:
            y = M1.partner[x]
            seq += [x, y]
            seen.update((x, y))
            x = M2.partner[y]
            if x == v:
                break
        out.append(AlternatingCycle(tuple(seq)))
    return out


# -- text format -------------------------------------------------------


def format_matching(M: PerfectMatching) -> str:
    return "".join(f"{u} {v}\n" for u, v in M.edges)


def parse_matching(text: str, G: Graph) -> PerfectMatching:
    edges = []
    for i, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {line.strip()!r}", i)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer token in {line.strip()!r}", i) from None
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise FormatError(f"({u}, {v}) is not an edge of the companion graph", i)
        edges.append((u, v))
    try:
        M = PerfectMatching.from_edges(G.n, edges)
    except InvalidInput as exc:
        raise FormatError(str(exc)) from None
    return M


def read_matching(path, G: Graph) -> PerfectMatching:
    with open(path, encoding="ascii") as fh:
        return parse_matching(fh.read(), G)
