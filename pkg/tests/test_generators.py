import pytest

from antiforce.errors import InvalidInput
from antiforce.generators import (
    FamilySpec,
    complete_bipartite,
    enhanced_hypercube,
    enhanced_hypercube_classes,
    folded_hypercube,
    folded_hypercube_classes,
    generate,
    hamming_distance,
    hypercube,
)
from antiforce.graph import all_pairs_distances, bipartition
from antiforce.matchings import PerfectMatching
from antiforce.morphisms import find_isomorphism


def test_hypercube_sizes():
    G, cl = generate(FamilySpec("hypercube", (3,)))
    assert (G.n, G.e) == (8, 12)
    assert sorted(cl) == [1, 2, 3]
    assert all(len(c) == 4 for c in cl.values())
    # class 1 flips the lowest bit
    assert (0, 1) in cl[1] and (0, 2) in cl[2] and (0, 4) in cl[3]


def test_folded_sizes():
    G, cl = folded_hypercube_classes(4)
    assert (G.n, G.e) == (16, 40)
    assert len(cl[5]) == 8
    assert all(u ^ v == 15 for u, v in cl[5])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_classes_are_perfect_matchings(n):
    G, cl = folded_hypercube_classes(n)
    for edges in cl.values():
        PerfectMatching.from_edges(G.n, edges)
    assert set().union(*cl.values()) == set(G.edges)


def test_enhanced_extremes():
    assert enhanced_hypercube(4, 3) == hypercube(4)
    assert enhanced_hypercube(4, 0) == folded_hypercube(4)


def test_enhanced_extra_edges_keep_suffix():
    n, k = 5, 2
    G, cl = enhanced_hypercube_classes(n, k)
    for u, v in cl[n + 1]:
        # first n-k coordinates complemented, last k kept
        assert u ^ v == (1 << (n - k)) - 1


def test_enhanced_41_is_fq3_times_k2():
    from antiforce.generators import complete
    from antiforce.products import cartesian_product
    P = cartesian_product(folded_hypercube(3), complete(2)).graph
    assert find_isomorphism(enhanced_hypercube(4, 1), P) is not None


@pytest.mark.parametrize("n", [4, 5])
def test_fq_parity_and_girth(n):
    G = folded_hypercube(n)
    assert (bipartition(G) is not None) == (n % 2 == 1)
    d = all_pairs_distances(G)
    # no triangles: adjacent vertices share no neighbour
    assert all(G.adj[u] & G.adj[v] == 0 for u, v in G.edges)
    if n % 2 == 0:
        # shortest odd cycle is n+1: some edge closes an odd cycle of that length
        best = min(d[u][w] + d[v][w] + 1 for u, v in G.edges for w in range(G.n) if d[u][w] == d[v][w])
        assert best == n + 1


def test_hamming():
    assert hamming_distance(0b000, 0b111, 3) == 3
    assert hamming_distance(5, 5, 4) == 0
    assert hamming_distance(0b0101, 0b0110, 4) == 2
    with pytest.raises(InvalidInput):
        hamming_distance(8, 0, 3)


def test_bad_specs():
    with pytest.raises(InvalidInput):
        FamilySpec("petersen", (1,))
    with pytest.raises(InvalidInput):
        FamilySpec("hypercube", ())
    with pytest.raises(InvalidInput):
        generate(FamilySpec("enhanced_hypercube", (3, 3)))
    with pytest.raises(InvalidInput):
        generate(FamilySpec("hypercube", (0,)))


def test_complete_bipartite_parts():
    G = complete_bipartite(2, 3)
    assert (G.n, G.e) == (5, 6)
    assert bipartition(G) == (frozenset({0, 1}), frozenset({2, 3, 4}))
