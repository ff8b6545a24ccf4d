"""Immutable simple graphs on dense vertex ids.

Neighbourhoods are kept as Python ``int`` bitsets (bit ``v`` of ``adj[u]`` is
set iff ``uv`` is an edge), which makes adjacency tests and neighbourhood
intersections single integer operations. The compiled kernels take the same
masks as unsigned 64-bit words when ``n <= 64``.
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import FormatError, InvalidInput

INF = float("inf")


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canon(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``edges`` is the sorted tuple of canonical pairs ``(u, v)`` with ``u < v``;
    ``adj[u]`` is the neighbour bitset of ``u``.
    """

    __slots__ = ("n", "edges", "adj", "_index", "_nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidInput(f"negative vertex count {n}")
        adj = [0] * n
        seen = set()
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise InvalidInput(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = canon(u, v)
            if e in seen:
                continue
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = tuple(sorted(seen))
        self.adj = tuple(adj)
        self._index = None
        self._nbrs = None

    # -- basic queries -------------------------------------------------

    @property
    def e(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> tuple[int, ...]:
        if self._nbrs is None:
            self._nbrs = tuple(tuple(bits(a)) for a in self.adj)
        return self._nbrs[v]

    def edge_index(self, e: tuple[int, int]) -> int:
        """Position of ``e`` in ``edges``; raises ``InvalidInput`` if absent."""
        if self._index is None:
            self._index = {edge: i for i, edge in enumerate(self.edges)}
        try:
            return self._index[canon(*e)]
        except KeyError:
            raise InvalidInput(f"{e} is not an edge") from None

    def __contains__(self, e) -> bool:
        u, v = e
        return 0 <= u < self.n and 0 <= v < self.n and u != v and self.has_edge(u, v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e})"

    # -- derived graphs ------------------------------------------------

    def remove_edges(self, removed: Iterable[tuple[int, int]]) -> Graph:
        drop = {canon(*e) for e in removed}
        return Graph(self.n, (e for e in self.edges if e not in drop))

    def add_edges(self, added: Iterable[tuple[int, int]]) -> Graph:
        return Graph(self.n, list(self.edges) + [canon(*e) for e in added])

    def relabel(self, perm) -> Graph:
        """Graph on the same vertex count with ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by least vertex."""
        comps = []
        unseen = (1 << self.n) - 1
        while unseen:
            start = unseen & -unseen
            comp = reach = start
            while reach:
                nxt = 0
                for v in bits(reach):
                    nxt |= self.adj[v]
                reach = nxt & ~comp
                comp |= reach
            unseen &= ~comp
            comps.append(list(bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, pairs)


def all_pairs_distances(G: Graph) -> list[list[float]]:
    """Hop distances by bitset BFS; ``INF`` between components."""
    n = G.n
    adj = G.adj
    dist = []
    for s in range(n):
        row = [INF] * n
        row[s] = 0
        seen = frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in bits(frontier):
                row[v] = d
        dist.append(row)
    return dist


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``S`` with vertices renumbered in ascending order.

    Returns ``(H, remap)`` where ``remap[i]`` is the vertex of ``G`` that became
    vertex ``i`` of ``H``.
    """
    remap = sorted(set(S))
    for v in remap:
        if not 0 <= v < G.n:
            raise InvalidInput(f"vertex {v} not in graph")
    pos = {v: i for i, v in enumerate(remap)}
    edges = [(pos[u], pos[v]) for u, v in G.edges if u in pos and v in pos]
    return Graph(len(remap), edges), remap


def bipartition(G: Graph) -> tuple[frozenset, frozenset] | None:
    """Two-colouring with the least vertex of every component on side X."""
    colour = [-1] * G.n
    for comp in G.components():
        root = comp[0]
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return None
    X = frozenset(v for v in range(G.n) if colour[v] == 0)
    Y = frozenset(v for v in range(G.n) if colour[v] == 1)
    return X, Y


def is_isometric_subgraph(G: Graph, vertices: Iterable[int], edges=None) -> bool:
    """Whether the subgraph (``vertices``, ``edges``) preserves all G-distances.

    ``edges`` defaults to the edges induced by ``vertices``.
    """
    vs = sorted(set(vertices))
    vset = set(vs)
    if edges is None:
        sub_edges = [e for e in G.edges if e[0] in vset and e[1] in vset]
    else:
        sub_edges = []
        for u, v in edges:
            if u not in vset or v not in vset:
                raise InvalidInput(f"edge ({u}, {v}) leaves the chosen vertex set")
            if (u, v) not in G:
                raise InvalidInput(f"({u}, {v}) is not an edge of the host graph")
            sub_edges.append((u, v))
    H, remap = induced_subgraph(Graph(G.n, sub_edges), vs)
    dG = all_pairs_distances(G)
    dH = all_pairs_distances(H)
    for i, u in enumerate(remap):
        for j in range(i + 1, len(remap)):
            if dH[i][j] != dG[u][remap[j]]:
                return False
    return True


# -- text format -------------------------------------------------------


def format_graph(G: Graph) -> str:
    lines = [f"{G.n} {G.e}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} integers, got {line.strip()!r}", lineno)
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"non-integer token in {line.strip()!r}", lineno) from None
    if any(x < 0 for x in vals):
        raise FormatError("negative value", lineno)
    return vals


def parse_graph(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty graph file")
    n, m = _ints(lines[0], 1, 2)
    body = lines[1:]
    if len(body) < m:
        raise FormatError(f"header announces {m} edges, file ends after {len(body)}", len(lines) + 1)
    extra = [i for i, line in enumerate(body[m:], start=m + 2) if line.strip()]
    if extra:
        raise FormatError(f"header announces {m} edges, found more", extra[0])
    pairs = []
    seen = set()
    for i, line in enumerate(body[:m], start=2):
        u, v = _ints(line, i, 2)
        if u == v:
            raise FormatError(f"loop at vertex {u}", i)
        if u >= n or v >= n:
            raise FormatError(f"vertex id out of range 0..{n - 1}", i)
        if canon(u, v) in seen:
            raise FormatError(f"duplicate edge {u} {v}", i)
        seen.add(canon(u, v))
        pairs.append((u, v))
    return Graph(n, pairs)


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_graph(G: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_graph(G))
