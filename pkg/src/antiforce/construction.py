"""Building extremal graphs from K2 with the two expansion operations.

Operation ``op_i`` adds two edges that close a 4-cycle with two matching
edges. Operation ``op_ii`` joins a second graph (vertex ids shifted past the
first) along equal-size sub-matchings through a matching-compatible
bijection; empty sub-matchings give a disjoint union.

A ``ConstructionTrace`` is replayable: ``seed_k2`` starts from K2 and every
later step refers to current vertex ids. ``labels`` optionally renames the
replayed vertices at the end (``labels[i]`` is the final id of vertex ``i``).

Random traces use xorshift64* seeded through splitmix64::

    x ^= x >> 12; x ^= (x << 25) mod 2**64; x ^= x >> 27
    out = (x * 0x2545F4914F6CDD1D) mod 2**64

and ``below(k) = out % k``, so traces are reproducible from the seed alone.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .errors import FormatError, InvalidInput, NotNice
from .generators import complete
from .graph import Graph, canon, induced_subgraph
from .matchings import PerfectMatching, check_matching, pm_containing_edge
from .nice import is_nice

MASK64 = (1 << 64) - 1


class XorShift64Star:
    def __init__(self, seed: int):
        # splitmix64 scrambles the seed and never yields a zero state here
        z = (seed + 0x9E3779B97F4A7C15) & MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        self.state = (z ^ (z >> 31)) or 1

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, k: int) -> int:
        return self.next() % k

    def choice(self, seq):
        return seq[self.below(len(seq))]


@dataclass(frozen=True)
class ExpansionStep:
    kind: str  # "seed_k2", "op_i" or "op_ii"
    e1: tuple[int, int] | None = None
    e2: tuple[int, int] | None = None
    choice: str | None = None  # "parallel" or "crossed"
    other_n: int = 0
    other_edges: tuple = ()
    other_matching: tuple = ()
    sub1: tuple = ()
    sub2: tuple = ()
    phi: tuple = ()  # pairs (u in G1, phi(u) in G2 before shifting)

    def to_json(self) -> dict:
        if self.kind == "seed_k2":
            return {"kind": "seed_k2"}
        if self.kind == "op_i":
            return {"kind": "op_i", "e1": list(self.e1), "e2": list(self.e2), "choice": self.choice}
        return {
            "kind": "op_ii",
            "other": {
                "n": self.other_n,
                "edges": [list(e) for e in self.other_edges],
                "matching": [list(e) for e in self.other_matching],
            },
            "sub1": [list(e) for e in self.sub1],
            "sub2": [list(e) for e in self.sub2],
            "phi": [list(p) for p in self.phi],
        }

    @classmethod
    def from_json(cls, d: dict) -> ExpansionStep:
        kind = d.get("kind")
        pairs = lambda xs: tuple(tuple(int(a) for a in x) for x in xs)  # noqa: E731
        if kind == "seed_k2":
            return cls("seed_k2")
        if kind == "op_i":
            return cls("op_i", e1=tuple(d["e1"]), e2=tuple(d["e2"]), choice=d["choice"])
        if kind == "op_ii":
            o = d["other"]
            return cls(
                "op_ii",
                other_n=int(o["n"]),
                other_edges=pairs(o["edges"]),
                other_matching=pairs(o["matching"]),
                sub1=pairs(d["sub1"]),
                sub2=pairs(d["sub2"]),
                phi=pairs(d["phi"]),
            )
        raise FormatError(f"unknown step kind {kind!r}")


@dataclass
class ConstructionTrace:
    steps: list[ExpansionStep] = field(default_factory=list)
    graph: Graph | None = None
    matching: PerfectMatching | None = None
    labels: tuple[int, ...] | None = None

    def to_json(self) -> str:
        doc = {"steps": [s.to_json() for s in self.steps]}
        if self.labels is not None:
            doc["labels"] = list(self.labels)
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> ConstructionTrace:
        try:
            doc = json.loads(text)
            steps = [ExpansionStep.from_json(s) for s in doc["steps"]]
            labels = tuple(doc["labels"]) if "labels" in doc else None
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad trace: {exc}") from None
        G, M = replay(steps, labels)
        return cls(steps, G, M, labels)


def _require_nice(G, M):
    if not is_nice(G, M):
        raise NotNice("operation input matching is not nice")


def op_i_edges(e1, e2, choice):
    (u1, v1), (u2, v2) = e1, e2
    if choice == "parallel":
        return canon(u1, u2), canon(v1, v2)
    if choice == "crossed":
        return canon(u1, v2), canon(v1, u2)
    raise InvalidInput(f"choice must be 'parallel' or 'crossed', got {choice!r}")


def expand_i(G: Graph, M: PerfectMatching, e1, e2, choice: str, check: bool = True) -> tuple[Graph, PerfectMatching]:
    """Add the two edges closing a 4-cycle with matching edges ``e1`` and ``e2``.

    ``e1 = (u1, v1)`` and ``e2 = (u2, v2)`` are taken in the given
    orientation: ``parallel`` adds ``u1u2, v1v2``; ``crossed`` adds
    ``u1v2, v1u2``.
    """
    check_matching(G, M)
    if tuple(e1) not in M or tuple(e2) not in M or canon(*e1) == canon(*e2):
        raise InvalidInput("e1 and e2 must be distinct matching edges")
    if check:
        _require_nice(G, M)
    new = op_i_edges(e1, e2, choice)
    if any(e in G for e in new):
        raise InvalidInput(f"edges {new} must both be absent")
    H = G.add_edges(new)
    if check:
        assert is_nice(H, M)
    return H, M


def expand_ii(G1, M1, G2, M2, sub1, sub2, phi, check: bool = True) -> tuple[Graph, PerfectMatching]:
    """Join ``G2`` to ``G1`` over ``sub1`` / ``sub2`` through ``phi``.

    ``phi`` maps every endpoint of ``sub1`` to an endpoint of ``sub2`` (G2
    ids); G2's vertices are shifted by ``G1.n`` in the result.
    """
    check_matching(G1, M1)
    check_matching(G2, M2)
    if check:
        _require_nice(G1, M1)
        _require_nice(G2, M2)
    sub1 = {canon(*e) for e in sub1}
    sub2 = {canon(*e) for e in sub2}
    if len(sub1) != len(sub2):
        raise InvalidInput("sub-matchings must have equal size")
    if any(e not in M1 for e in sub1) or any(e not in M2 for e in sub2):
        raise InvalidInput("sub-matchings must lie inside the matchings")
    phi = dict(phi)
    dom = {v for e in sub1 for v in e}
    img = {v for e in sub2 for v in e}
    if set(phi) != dom or set(phi.values()) != img or len(img) != len(dom):
        raise InvalidInput("phi must be a bijection between the sub-matching vertex sets")
    for u, v in sub1:
        if canon(phi[u], phi[v]) not in sub2:
            raise InvalidInput(f"phi does not carry ({u}, {v}) onto a sub2 edge")
    n1 = G1.n
    edges = list(G1.edges) + [(u + n1, v + n1) for u, v in G2.edges]
    edges += [(u, phi[u] + n1) for u in sorted(dom)]
    G = Graph(n1 + G2.n, edges)
    M = PerfectMatching(M1.partner + tuple(w + n1 for w in M2.partner))
    if check:
        assert is_nice(G, M)
    return G, M


def _k2():
    return complete(2), PerfectMatching((1, 0))


def apply_step(G, M, step: ExpansionStep, check: bool = True):
    if step.kind == "seed_k2":
        if G is not None:
            raise InvalidInput("seed_k2 may only start a trace")
        return _k2()
    if G is None:
        raise InvalidInput("trace must start with seed_k2")
    if step.kind == "op_i":
        return expand_i(G, M, step.e1, step.e2, step.choice, check)
    if step.kind == "op_ii":
        G2 = Graph(step.other_n, step.other_edges)
        M2 = PerfectMatching.from_edges(step.other_n, step.other_matching)
        return expand_ii(G, M, G2, M2, step.sub1, step.sub2, step.phi, check)
    raise InvalidInput(f"unknown step kind {step.kind!r}")


def replay(steps, labels=None, check: bool = True) -> tuple[Graph, PerfectMatching]:
    G = M = None
    for step in steps:
        G, M = apply_step(G, M, step, check)
    if G is None:
        raise InvalidInput("empty trace")
    if labels is not None:
        if sorted(labels) != list(range(G.n)):
            raise InvalidInput("labels must be a permutation of the vertices")
        G = G.relabel(labels)
        M = M.mapped(labels)
    return G, M


def _random_op_ii(rng, G, M, G2, M2):
    m1, m2 = list(M.edges), list(M2.edges)
    k = rng.below(min(len(m1), len(m2)) + 1)
    pick1 = _sample(rng, m1, k)
    pick2 = _sample(rng, m2, k)
    phi = []
    for (a, b), (c, d) in zip(pick1, pick2):
        if rng.below(2):
            c, d = d, c
        phi += [(a, c), (b, d)]
    return ExpansionStep(
        "op_ii",
        other_n=G2.n,
        other_edges=G2.edges,
        other_matching=M2.edges,
        sub1=tuple(sorted(pick1)),
        sub2=tuple(sorted(pick2)),
        phi=tuple(sorted(phi)),
    )


def _sample(rng, items, k):
    items = list(items)
    out = []
    for _ in range(k):
        out.append(items.pop(rng.below(len(items))))
    return out


def random_extremal(seed: int, steps: int, max_vertices: int = 14) -> ConstructionTrace:
    """A seeded random trace of ``steps`` expansions starting from K2.

    Each step flips a coin between the two operations when both apply; an
    ``op_i`` move is drawn uniformly from all (edge pair, choice) options and
    an ``op_ii`` partner uniformly from K2 and the graphs built so far that
    fit under ``max_vertices``. Steps where neither applies are skipped.
    """
    rng = XorShift64Star(seed)
    G, M = _k2()
    trace = [ExpansionStep("seed_k2")]
    pool = [(G, M)]
    for _ in range(steps):
        medges = M.edges
        moves = []
        for i, e1 in enumerate(medges):
            for e2 in medges[i + 1:]:
                for choice in ("parallel", "crossed"):
                    if not any(e in G for e in op_i_edges(e1, e2, choice)):
                        moves.append((e1, e2, choice))
        partners = [p for p in pool if G.n + p[0].n <= max_vertices]
        if not moves and not partners:
            continue
        if moves and (not partners or rng.below(2) == 0):
            e1, e2, choice = rng.choice(moves)
            step = ExpansionStep("op_i", e1=e1, e2=e2, choice=choice)
        else:
            G2, M2 = rng.choice(partners)
            step = _random_op_ii(rng, G, M, G2, M2)
        G, M = apply_step(G, M, step, check=False)
        trace.append(step)
        pool.append((G, M))
    assert is_nice(G, M)
    return ConstructionTrace(trace, G, M)


def decompose(G: Graph, M: PerfectMatching) -> ConstructionTrace:
    """A trace rebuilding ``G`` from K2, adding matching edges in ascending order.

    Matching edge ``k`` (0-based) becomes replay vertices ``2k, 2k+1``. Each
    new edge either arrives as a disjoint K2, or is joined to the first
    earlier matching edge it touches and then receives its remaining edges by
    ``op_i`` steps.
    """
    if not is_nice(G, M):
        raise NotNice("only nice matchings can be decomposed")
    medges = M.edges
    rid = {}
    for k, (a, b) in enumerate(medges):
        rid[a], rid[b] = 2 * k, 2 * k + 1
    steps = [ExpansionStep("seed_k2")]
    k2_edges, k2_match = ((0, 1),), ((0, 1),)
    for k in range(1, len(medges)):
        a, b = medges[k]
        ra, rb = 2 * k, 2 * k + 1
        links = []  # (earlier edge index, pattern) with pattern 0: a~x, 1: a~y
        for j in range(k):
            x, y = medges[j]
            if G.has_edge(a, x):
                links.append((j, 0))
            if G.has_edge(a, y):
                links.append((j, 1))
        if not links:
            steps.append(ExpansionStep("op_ii", other_n=2, other_edges=k2_edges, other_matching=k2_match))
            continue
        j, pattern = links[0]
        rx, ry = 2 * j, 2 * j + 1
        phi = ((rx, 0), (ry, 1)) if pattern == 0 else ((rx, 1), (ry, 0))
        steps.append(ExpansionStep(
            "op_ii", other_n=2, other_edges=k2_edges, other_matching=k2_match,
            sub1=((rx, ry),), sub2=((0, 1),), phi=phi,
        ))
        for j, pattern in links[1:]:
            rx, ry = 2 * j, 2 * j + 1
            choice = "parallel" if pattern == 0 else "crossed"
            steps.append(ExpansionStep("op_i", e1=(rx, ry), e2=(ra, rb), choice=choice))
    labels = tuple(v for e in medges for v in e)
    H, N = replay(steps, labels)
    assert H == G and N == M
    return ConstructionTrace(steps, H, N, labels)


def is_one_extendable(G: Graph) -> bool:
    """Whether every edge lies in some perfect matching."""
    covered = set()
    for e in G.edges:
        if e in covered:
            continue
        M = pm_containing_edge(G, e)
        if M is None:
            return False
        covered.update(M.edges)
    return True


def is_two_connected(G: Graph) -> bool:
    if G.n < 3 or not G.is_connected():
        return False
    for v in range(G.n):
        keep = [u for u in range(G.n) if u != v]
        if not induced_subgraph(G, keep)[0].is_connected():
            return False
    return True


def random_graph_with_pm(seed: int, n: int, p: float = 0.4, bipartite: bool = False,
                         connected: bool = True) -> tuple[Graph, PerfectMatching]:
    """Seeded random graph containing a planted perfect matching.

    Vertices ``2i, 2i+1`` are matched. Other pairs become edges with
    probability ``p`` (only across the two colour classes ``even``/``odd`` when
    ``bipartite``). With ``connected``, a random spanning path over the
    matched pairs is added first. For property tests.
    """
    if n % 2:
        raise InvalidInput("n must be even")
    rng = random.Random(seed)
    edges = {(2 * i, 2 * i + 1) for i in range(n // 2)}

    def allowed(u, v):
        return not bipartite or (u % 2) != (v % 2)

    if connected and n > 2:
        order = list(range(n // 2))
        rng.shuffle(order)
        for a, b in zip(order, order[1:]):
            u = 2 * a + rng.randrange(2)
            v = 2 * b + rng.randrange(2)
            if not allowed(u, v):
                v ^= 1
            edges.add(canon(u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if allowed(u, v) and rng.random() < p:
                edges.add((u, v))
    G = Graph(n, edges)
    return G, PerfectMatching(tuple(v ^ 1 for v in range(n)))


def fold_hypercube(n: int) -> tuple[Graph, PerfectMatching, list[ExpansionStep]]:
    """``FQ_n`` obtained from ``Q_n`` with its 1-edge matching by ``op_i`` steps.

    Returns the folded graph, the carried matching and the steps (which apply
    to ``Q_n``, not to K2).

    Each step pairs the 1-edges ``{x, x^1}`` and ``{~x ^ 1, ~x}`` so that the
    two added edges are complementary edges.
    """
    from .generators import hypercube_classes

    G, classes = hypercube_classes(n)
    M = PerfectMatching.from_edges(G.n, classes[1])
    full = (1 << n) - 1
    steps = []
    for x in range(0, 1 << n, 2):
        y = full ^ x  # odd, matched with y ^ 1
        if y ^ 1 < x:
            continue
        step = ExpansionStep("op_i", e1=(x, x + 1), e2=(y, y ^ 1), choice="parallel")
        G, M = apply_step(G, M, step)
        steps.append(step)
    return G, M, steps
