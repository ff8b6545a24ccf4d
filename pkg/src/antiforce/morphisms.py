"""Backtracking search for isomorphisms, optionally carrying a matching.

Candidates are pruned by colour refinement (iterated neighbour-colour
multisets, starting from degrees) computed jointly on both graphs, and by
adjacency consistency with the partial map.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph, bits


def refine_colours(*graphs: Graph) -> list[list[int]]:
    """Stable colour refinement with colour ids shared between ``graphs``."""
    colours = [g.degrees() for g in graphs]
    n_classes = len({c for cs in colours for c in cs})
    while True:
        sigs = [
            [(cs[v], tuple(sorted(cs[w] for w in g.neighbors(v)))) for v in range(g.n)]
            for g, cs in zip(graphs, colours)
        ]
        palette = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colours = [[palette[s] for s in ss] for ss in sigs]
        if len(palette) == n_classes:
            return colours
        n_classes = len(palette)


def _bfs_order(G: Graph) -> list[int]:
    order, seen = [], set()
    for comp in G.components():
        root = comp[0]
        queue = [root]
        seen.add(root)
        for v in queue:
            for w in G.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        order.extend(queue)
    return order


def find_isomorphism(G: Graph, H: Graph, pairs_g=None, pairs_h=None) -> tuple[int, ...] | None:
    """A bijection ``phi`` with ``uv in E(G) <=> phi(u)phi(v) in E(H)``.

    When partner maps ``pairs_g`` / ``pairs_h`` are given, ``phi`` must also
    carry each pair ``{v, pairs_g[v]}`` onto a pair of ``pairs_h``. Returns the
    first map found in search order, or ``None``.
    """
    n = G.n
    if n != H.n or G.e != H.e:
        return None
    cg, ch = refine_colours(G, H)
    if Counter(cg) != Counter(ch):
        return None
    phi = [-1] * n
    inv = [-1] * n
    order = _bfs_order(G)
    state = {"dom": 0, "img": 0}

    def consistent(v, w):
        if cg[v] != ch[w]:
            return False
        img = 0
        for x in bits(G.adj[v] & state["dom"]):
            img |= 1 << phi[x]
        return img == H.adj[w] & state["img"]

    def put(v, w):
        phi[v], inv[w] = w, v
        state["dom"] |= 1 << v
        state["img"] |= 1 << w

    def drop(v, w):
        phi[v], inv[w] = -1, -1
        state["dom"] &= ~(1 << v)
        state["img"] &= ~(1 << w)

    def rec(i):
        while i < n and phi[order[i]] >= 0:
            i += 1
        if i == n:
            return True
        v = order[i]
        anchored = G.adj[v] & state["dom"]
        if anchored:
            x = (anchored & -anchored).bit_length() - 1
            cand = H.adj[phi[x]] & ~state["img"]
        else:
            cand = ((1 << n) - 1) & ~state["img"]
        for w in bits(cand):
            if not consistent(v, w):
                continue
            put(v, w)
            if pairs_g is not None:
                v2, w2 = pairs_g[v], pairs_h[w]
                if phi[v2] >= 0 or inv[w2] >= 0 or not consistent(v2, w2):
                    drop(v, w)
                    continue
                put(v2, w2)
            if rec(i + 1):
                return True
            if pairs_g is not None:
                drop(pairs_g[v], pairs_h[w])
            drop(v, w)
        return False

    return tuple(phi) if rec(0) else None


def is_automorphism(G: Graph, perm) -> bool:
    if sorted(perm) != list(range(G.n)):
        return False
    return all(G.has_edge(perm[u], perm[v]) for u, v in G.edges)
