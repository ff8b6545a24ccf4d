"""The ``verify`` check suite and its report serialisation."""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from . import __version__
from .antiforcing import bounds, max_antiforcing, min_antiforcing, omega_antiforcing_set
from .construction import decompose, fold_hypercube, is_one_extendable, random_extremal
from .generators import (
    complete,
    complete_bipartite,
    cycle,
    enhanced_hypercube,
    folded_hypercube,
    hypercube,
    hypercube_classes,
)
from .graph import Graph
from .matchings import (
    PerfectMatching,
    count_alternating_4cycles,
    enumerate_perfect_matchings,
    has_unique_pm,
)
from .nice import edge_involutions, enumerate_nice, equivalence_classes, involution_of, is_nice, matching_of
from .products import cartesian_product, is_isomorphic, prime_by_theta, rho, sigma, theta_partition

SCHEMA = "antiforce/1"


@dataclass
class Check:
    name: str
    inputs: dict
    expected: object
    actual: object
    millis: float | None = None

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
            "millis": self.millis,
        }


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)
    seed: int = 0
    version: str = __version__

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def emit_report(R: Report, fmt: str = "json") -> bytes:
    """Stable serialisation: sorted JSON keys, checks in suite order."""
    if fmt == "json":
        doc = {
            "schema": SCHEMA,
            "version": R.version,
            "seed": R.seed,
            "checks": [c.to_json() for c in R.checks],
            "pass": R.passed,
        }
        return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()
    if fmt == "tsv":
        rows = ["name\texpected\tactual\tpass\tmillis"]
        for c in R.checks:
            millis = "-" if c.millis is None else f"{c.millis:.1f}"
            rows.append("\t".join([
                c.name,
                json.dumps(c.expected, sort_keys=True, separators=(",", ":")),
                json.dumps(c.actual, sort_keys=True, separators=(",", ":")),
                "true" if c.passed else "false",
                millis,
            ]))
        return ("\n".join(rows) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")


# -- shared corpus -----------------------------------------------------


def paw() -> Graph:
    """Triangle ``0 1 2`` with a pendant vertex ``3`` on ``2``."""
    return Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def bound_corpus() -> dict[str, Graph]:
    return {
        "K2": complete(2),
        "C4": cycle(4),
        "K4": complete(4),
        "C6": cycle(6),
        "K3,3": complete_bipartite(3),
        "K4,4": complete_bipartite(4),
        "Q3": hypercube(3),
        "paw": paw(),
    }


def product_corpus() -> dict[str, Graph]:
    return {
        "K2": complete(2),
        "C4": cycle(4),
        "K4": complete(4),
        "K3,3": complete_bipartite(3),
        "Q3": hypercube(3),
    }


def class_matching(n_vertices: int, edges) -> PerfectMatching:
    return PerfectMatching.from_edges(n_vertices, edges)


def bounds_hold(G: Graph) -> bool:
    """Every matching obeys both the quarter and the cyclomatic bound."""
    b = bounds(G)
    for M in enumerate_perfect_matchings(G):
        af = min_antiforcing(G, M, lexmin=False).value
        if 4 * af > 2 * G.e - G.n or af > b.cyclomatic:
            return False
    return True


def af_certificate(G: Graph, M: PerfectMatching) -> dict:
    """Two-sided certificate: 4-cycle lower bound and an omega witness."""
    S = omega_antiforcing_set(G, M)
    return {
        "lower_bound_c4": count_alternating_4cycles(G, M),
        "witness_size": len(S),
        "witness_unique_pm": has_unique_pm(G, M, S),
    }


def bijection_ok(G: Graph) -> dict:
    nice = enumerate_nice(G)
    trips = all(matching_of(G, involution_of(G, M)) == M for M in nice)
    invs = edge_involutions(G)
    back = all(involution_of(G, matching_of(G, a)) == a for a in invs)
    return {"round_trip": trips and back, "involutions": len(invs), "nice": nice.count}


def additivity(G1: Graph, G2: Graph) -> dict:
    P = cartesian_product(G1, G2)
    n1, n2 = enumerate_nice(G1), enumerate_nice(G2)
    prod = enumerate_nice(P.graph)
    images = {rho(P, M) for M in n1} | {sigma(P, M) for M in n2}
    return {"phi": prod.count, "images_exhaust": images == set(prod.matchings)}


# -- suite -------------------------------------------------------------


def _checks(max_dim: int, seed: int):
    """Yield ``(name, inputs, expected, thunk)`` for the requested tier."""
    for name, G in bound_corpus().items():
        yield f"bounds/{name}", {"graph": name}, True, lambda G=G: bounds_hold(G)

    for n, af in ((2, 2), (3, 6)):
        G = complete(2 * n)
        yield (f"complete/Af(K{2 * n})", {"n": 2 * n}, {"Af": af, "all_attain": True, "all_nice": True},
               lambda G=G, af=af: {
                   "Af": max_antiforcing(G)[0],
                   "all_attain": all(min_antiforcing(G, M, lexmin=False).value == af
                                     for M in enumerate_perfect_matchings(G)),
                   "all_nice": all(is_nice(G, M) for M in enumerate_perfect_matchings(G)),
               })

    for m in (2, 3, 4):
        G = complete_bipartite(m)
        yield (f"bipartite/K{m},{m}", {"m": m},
               {"Af": (m * m - m) // 2, "all_nice": True, "nice_count": math.factorial(m)},
               lambda G=G: {
                   "Af": max_antiforcing(G)[0],
                   "all_nice": all(is_nice(G, M) for M in enumerate_perfect_matchings(G)),
                   "nice_count": enumerate_nice(G).count,
               })

    if max_dim >= 3:
        Q3, cl = hypercube_classes(3)
        E1 = class_matching(8, cl[1])
        yield "hypercube/af(Q3,E1)", {"n": 3}, 4, lambda: min_antiforcing(Q3, E1).value
        yield "hypercube/Af(Q3)", {"n": 3}, 4, lambda: max_antiforcing(Q3)[0]
    if max_dim >= 4:
        Q4, cl = hypercube_classes(4)
        E1 = class_matching(16, cl[1])
        yield ("hypercube/certificate(Q4,E1)", {"n": 4},
               {"lower_bound_c4": 12, "witness_size": 12, "witness_unique_pm": True},
               lambda: af_certificate(Q4, E1))

    for n in range(2, max_dim + 1):
        G = hypercube(n)
        yield f"nice/Q{n}", {"n": n}, n, lambda G=G: enumerate_nice(G).count
    for n in range(2, max_dim + 1):
        G = folded_hypercube(n)
        expected = {2: 3, 3: 24}.get(n, n + 1)
        yield f"nice/FQ{n}", {"n": n}, expected, lambda G=G: enumerate_nice(G).count

    bij = {f"Q{n}": hypercube(n) for n in range(2, max_dim + 1)}
    bij.update({f"FQ{n}": folded_hypercube(n) for n in range(2, max_dim + 1)})
    for name, G in bij.items():
        yield (f"bijection/{name}", {"graph": name},
               {"round_trip": True, "involutions": enumerate_nice(G).count, "nice": enumerate_nice(G).count},
               lambda G=G: bijection_ok(G))

    corpus = product_corpus()
    cap = 16 if max_dim <= 3 else 32
    phis = {name: enumerate_nice(G).count for name, G in corpus.items()}
    for a, b in combinations_with_replacement(list(corpus), 2):
        G1, G2 = corpus[a], corpus[b]
        if G1.n * G2.n > cap:
            continue
        yield (f"additivity/{a}x{b}", {"G1": a, "G2": b},
               {"phi": phis[a] + phis[b], "images_exhaust": True},
               lambda G1=G1, G2=G2: additivity(G1, G2))

    if max_dim >= 4:
        Q41 = enhanced_hypercube(4, 1)
        FQ3xK2 = cartesian_product(folded_hypercube(3), complete(2)).graph
        yield "enhanced/Q4,1~FQ3xK2", {"n": 4, "k": 1}, True, lambda: is_isomorphic(Q41, FQ3xK2) is not None
        yield "enhanced/nice(Q4,1)", {"n": 4, "k": 1}, 25, lambda: enumerate_nice(Q41).count
        yield ("enhanced/classes(Q4,1)", {"n": 4, "k": 1}, 2,
               lambda: len(equivalence_classes(Q41, enumerate_nice(Q41))))
        yield ("enhanced/certificate(Q4,1)", {"n": 4, "k": 1},
               {"lower_bound_c4": 16, "witness_size": 16, "witness_unique_pm": True},
               lambda: af_certificate(Q41, enumerate_nice(Q41).matchings[0]))

    yield "theta/C6", {"graph": "C6"}, 3, lambda: theta_partition(cycle(6)).count
    if max_dim >= 3:
        Q3, cl = hypercube_classes(3)
        yield ("theta/Q3=E1,E2,E3", {"graph": "Q3"}, True,
               lambda: sorted(theta_partition(Q3).classes(), key=min) == [cl[1], cl[2], cl[3]])
    for n in range(4, max_dim + 1):
        G = folded_hypercube(n)
        yield f"prime/FQ{n}", {"n": n}, "prime", lambda G=G: prime_by_theta(G)

    if max_dim >= 3:
        traces = 100 if max_dim == 3 else 1000
        yield (f"construct/random[{traces}]", {"seed": seed, "traces": traces, "steps": 8, "max_vertices": 14},
               {"nice": traces, "one_extendable": True},
               lambda traces=traces: _random_traces(seed, traces))
        targets = {"C4": cycle(4), "K4": complete(4), "Q3": hypercube(3), "FQ3-from-Q3": fold_hypercube(3)[0]}
        for name, G in targets.items():
            yield f"construct/decompose({name})", {"graph": name}, True, lambda G=G: _round_trip(G)


def _random_traces(seed: int, count: int) -> dict:
    nice = 0
    extendable = True
    for s in range(seed, seed + count):
        t = random_extremal(s, 8, 14)
        nice += is_nice(t.graph, t.matching)
        if t.graph.n >= 4 and t.graph.is_connected():
            extendable &= is_one_extendable(t.graph)
    return {"nice": nice, "one_extendable": extendable}


def _round_trip(G: Graph) -> bool:
    M = enumerate_nice(G).matchings[0]
    t = decompose(G, M)
    return t.graph == G


def paper_suite(max_dim: int = 4, seed: int = 0, timings: bool = False) -> Report:
    """Run the built-in reference checks up to hypercube dimension ``max_dim`` (3, 4 or 5)."""
    if max_dim not in (3, 4, 5):
        raise ValueError("max_dim must be 3, 4 or 5")
    report = Report(seed=seed)
    for name, inputs, expected, thunk in _checks(max_dim, seed):
        t0 = time.perf_counter()
        actual = thunk()
        ms = (time.perf_counter() - t0) * 1000 if timings else None
        report.checks.append(Check(name, inputs, expected, actual, ms))
    return report
