"""Cartesian products, layers and the Djokovic-Winkler relation.

Product vertex ``(x, u)`` has id ``x * n2 + u`` (row-major in the first
factor).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import InvalidInput
from .graph import INF, Graph, all_pairs_distances, induced_subgraph
from .matchings import PerfectMatching
from .morphisms import find_isomorphism
from .unionfind import UnionFind


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    factors: tuple[Graph, Graph]

    def coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.factors[1].n)

    def vertex(self, x: int, u: int) -> int:
        return x * self.factors[1].n + u


def cartesian_product(G1: Graph, G2: Graph) -> ProductGraph:
    n1, n2 = G1.n, G2.n
    edges = [(x * n2 + u, y * n2 + u) for u in range(n2) for x, y in G1.edges]
    edges += [(x * n2 + u, x * n2 + v) for x in range(n1) for u, v in G2.edges]
    return ProductGraph(Graph(n1 * n2, edges), (G1, G2))


def product_of(*graphs: Graph) -> Graph:
    """Left-nested product ``((G1 x G2) x G3) ...`` as a plain graph."""
    return reduce(lambda a, b: cartesian_product(a, b).graph, graphs)


def layer(P: ProductGraph, which: int, anchor: int) -> tuple[list[int], Graph]:
    """Vertices and graph of the ``which``-factor layer through ``anchor``.

    ``which`` is 1 or 2. The layer's vertices are listed in factor-id order,
    so the returned graph equals the factor itself.
    """
    if not 0 <= anchor < P.graph.n:
        raise InvalidInput(f"anchor {anchor} outside the product")
    x0, u0 = P.coords(anchor)
    if which == 1:
        verts = [P.vertex(x, u0) for x in range(P.factors[0].n)]
    elif which == 2:
        verts = [P.vertex(x0, u) for u in range(P.factors[1].n)]
    else:
        raise InvalidInput("factor index must be 1 or 2")
    H, _ = induced_subgraph(P.graph, verts)
    assert H == P.factors[which - 1], "layer must reproduce its factor"
    return verts, H


def rho(P: ProductGraph, M1: PerfectMatching) -> PerfectMatching:
    """Copy a matching of the first factor into every first-factor layer."""
    n2 = P.factors[1].n
    edges = [(x * n2 + u, y * n2 + u) for u in range(n2) for x, y in M1.edges]
    return PerfectMatching.from_edges(P.graph.n, edges)


def sigma(P: ProductGraph, M2: PerfectMatching) -> PerfectMatching:
    """Copy a matching of the second factor into every second-factor layer."""
    n2 = P.factors[1].n
    edges = [(x * n2 + u, x * n2 + v) for x in range(P.factors[0].n) for u, v in M2.edges]
    return PerfectMatching.from_edges(P.graph.n, edges)


@dataclass(frozen=True)
class ThetaPartition:
    """Classes of the transitive closure of the Djokovic-Winkler relation.

    ``class_of[i]`` is the class of ``edges[i]``; classes are numbered by
    their least edge. ``witnesses`` logs every merging pair as
    ``(i, j, (d(x,u), d(y,v), d(x,v), d(y,u)))``.
    """

    edges: tuple[tuple[int, int], ...]
    class_of: tuple[int, ...]
    witnesses: tuple

    @property
    def count(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def classes(self) -> list[frozenset]:
        out = [set() for _ in range(self.count)]
        for e, c in zip(self.edges, self.class_of):
            out[c].add(e)
        return [frozenset(c) for c in out]


def theta_relation(G: Graph) -> np.ndarray:
    """Boolean matrix over edge indices: ``d(x,u)+d(y,v) != d(x,v)+d(y,u)``."""
    if not G.is_connected():
        raise InvalidInput("the relation needs a connected graph")
    D = np.array(all_pairs_distances(G), dtype=np.int64)
    E = np.array(G.edges, dtype=np.int64).reshape(-1, 2)
    x, y = E[:, 0], E[:, 1]
    return D[np.ix_(x, x)] + D[np.ix_(y, y)] != D[np.ix_(x, y)] + D[np.ix_(y, x)]


def theta_partition(G: Graph) -> ThetaPartition:
    rel = theta_relation(G)
    dist = all_pairs_distances(G)
    uf = UnionFind(G.e)
    log = []
    for i, j in zip(*np.nonzero(np.triu(rel, 1))):
        i, j = int(i), int(j)
        if uf.union(i, j):
            (x, y), (u, v) = G.edges[i], G.edges[j]
            log.append((i, j, (dist[x][u], dist[y][v], dist[x][v], dist[y][u])))
    class_of = [0] * G.e
    for cid, members in enumerate(uf.groups()):
        for i in members:
            class_of[i] = cid
    return ThetaPartition(G.edges, tuple(class_of), tuple(log))


def prime_by_theta(G: Graph) -> str:
    """``"prime"`` when all edges share one class, else ``"inconclusive"``.

    A single class certifies primality; several classes prove nothing.
    """
    if G.n < 2:
        raise InvalidInput("primality needs a nontrivial graph")
    return "prime" if theta_partition(G).count == 1 else "inconclusive"


def is_isomorphic(G: Graph, H: Graph) -> tuple[int, ...] | None:
    return find_isomorphism(G, H)


__all__ = [
    "INF",
    "ProductGraph",
    "ThetaPartition",
    "cartesian_product",
    "is_isomorphic",
    "layer",
    "prime_by_theta",
    "product_of",
    "rho",
    "sigma",
    "theta_partition",
    "theta_relation",
]
