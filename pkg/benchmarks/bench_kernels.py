"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each row times one workload under both backends and prints the speedup.
"""

import argparse
import statistics
import time

from antiforce import kernels
from antiforce.antiforcing import max_antiforcing, min_antiforcing
from antiforce.generators import complete, complete_bipartite, enhanced_hypercube, hypercube, hypercube_classes
from antiforce.matchings import PerfectMatching, enumerate_perfect_matchings, find_alternating_cycle, has_unique_pm

COMPILED = kernels._ckernels


def workloads():
    Q4, cl = hypercube_classes(4)
    E1 = PerfectMatching.from_edges(16, cl[1])
    Q5, cl5 = hypercube_classes(5)
    E1_5 = PerfectMatching.from_edges(32, cl5[1])
    Q41 = enhanced_hypercube(4, 1)
    M41 = enumerate_perfect_matchings(Q41, limit=1)[0]
    return [
        ("pm enumeration K8", lambda: enumerate_perfect_matchings(complete(8))),
        ("pm enumeration Q4", lambda: enumerate_perfect_matchings(hypercube(4))),
        ("pm enumeration K5,5", lambda: enumerate_perfect_matchings(complete_bipartite(5))),
        ("cycle search Q5 x200", lambda: [find_alternating_cycle(Q5, E1_5) for _ in range(200)]),
        ("unique-pm probe Q5 x200", lambda: [has_unique_pm(Q5, E1_5, cl5[2]) for _ in range(200)]),
        ("branch and bound af(Q4, E1)", lambda: min_antiforcing(Q4, E1)),
        ("branch and bound af(Q4,1)", lambda: min_antiforcing(Q41, M41)),
        ("Af(K6) over all matchings", lambda: max_antiforcing(complete(6))),
        ("Af(K4,4) over all matchings", lambda: max_antiforcing(complete_bipartite(4))),
    ]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="runs per workload (best is reported)")
    args = ap.parse_args(argv)
    if COMPILED is None:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'workload':34} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, fn in workloads():
        kernels._ckernels = None
        py, _ = best_of(fn, args.repeat)
        kernels._ckernels = COMPILED
        if COMPILED is None:
            print(f"{name:34} {py * 1e3:10.2f} {'-':>10} {'-':>8}")
            continue
        cy, _ = best_of(fn, args.repeat)
        print(f"{name:34} {py * 1e3:10.2f} {cy * 1e3:10.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
