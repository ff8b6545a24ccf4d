import os
import subprocess
import sys

import pytest

from antiforce import _pykernels, kernels
from antiforce.construction import random_graph_with_pm
from antiforce.generators import folded_hypercube, hypercube
from antiforce.matchings import enumerate_perfect_matchings, free_masks

ck = pytest.importorskip("antiforce._ckernels")


def cases():
    for seed in range(40):
        yield random_graph_with_pm(seed, 4 + 2 * (seed % 5), p=0.45, connected=seed % 3 != 0)
    for G in (hypercube(3), hypercube(4), folded_hypercube(4)):
        yield G, enumerate_perfect_matchings(G, limit=1)[0]


@pytest.mark.parametrize("G, M", list(cases()))
def test_backends_agree(G, M):
    n, p = G.n, M.partner
    avail = free_masks(G, M)
    for k in range(1, n // 2 + 1):
        assert ck.alternating_cycle(n, p, avail, k) == _pykernels.alternating_cycle(n, p, avail, k)
    assert ck.count_alternating_4cycles(n, p, avail) == _pykernels.count_alternating_4cycles(n, p, avail)
    full = (1 << n) - 1
    assert list(ck.perfect_matchings(n, G.adj, full, 0)) == list(_pykernels.perfect_matchings(n, G.adj, full, 0))
    alive = full & ~(1 << M.partner[0]) & ~1
    assert list(ck.perfect_matchings(n, G.adj, alive, 3)) == list(_pykernels.perfect_matchings(n, G.adj, alive, 3))


def test_compiled_size_limit():
    with pytest.raises(ValueError):
        ck.count_alternating_4cycles(65, [0] * 65, [0] * 65)


def test_large_graphs_fall_back():
    G = hypercube(7)
    M = enumerate_perfect_matchings(hypercube(7), limit=1)[0]
    assert G.n > kernels.MAX_COMPILED_N
    assert kernels.count_alternating_4cycles(G.n, M.partner, free_masks(G, M)) == 6 * 32


def test_env_forces_python():
    code = "from antiforce import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, ANTIFORCE_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_benchmark_script_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    before = kernels._ckernels
    mod.main(["--repeat", "1"])
    assert kernels._ckernels is before
    assert "speedup" in capsys.readouterr().out
