import pytest
from oracles import brute_is_nice, brute_perfect_matchings

from antiforce.antiforcing import bounds, min_antiforcing
from antiforce.construction import random_graph_with_pm
from antiforce.errors import InvalidInput, NotNice
from antiforce.generators import (
    complete,
    complete_bipartite,
    cycle,
    enhanced_hypercube,
    folded_hypercube,
    folded_hypercube_classes,
    hypercube,
    hypercube_classes,
)
from antiforce.graph import Graph
from antiforce.matchings import PerfectMatching, enumerate_perfect_matchings
from antiforce.morphisms import find_isomorphism, is_automorphism
from antiforce.nice import (
    Involution,
    are_equivalent,
    edge_involutions,
    enumerate_nice,
    equivalence_classes,
    involution_of,
    is_nice,
    matching_of,
    succession_check,
)
from antiforce.products import cartesian_product, rho, sigma


def cls(G, edges):
    return PerfectMatching.from_edges(G.n, edges)


def test_is_nice_examples():
    G, cl = hypercube_classes(3)
    assert is_nice(G, cls(G, cl[1]))
    # 000-001, 010-110, 100-101, 011-111 mixes directions
    assert not is_nice(G, cls(G, [(0b000, 0b001), (0b010, 0b110), (0b100, 0b101), (0b011, 0b111)]))
    assert is_nice(complete(2), PerfectMatching((1, 0)))


def test_is_nice_invalid_matching():
    with pytest.raises(InvalidInput):
        is_nice(cycle(6), PerfectMatching((1, 0, 3, 2)))


def test_involution_examples():
    G, cl = hypercube_classes(3)
    assert involution_of(G, cls(G, cl[1])).alpha == tuple(v ^ 1 for v in range(8))
    assert involution_of(complete(4), PerfectMatching((2, 3, 0, 1))).alpha == (2, 3, 0, 1)
    assert involution_of(complete(2), PerfectMatching((1, 0))).alpha == (1, 0)
    bad = cls(G, [(0, 1), (2, 6), (4, 5), (3, 7)])
    with pytest.raises(NotNice):
        involution_of(G, bad)


def test_matching_of_examples():
    G, cl = hypercube_classes(3)
    assert matching_of(G, Involution(tuple(v ^ 1 for v in range(8)))) == cls(G, cl[1])
    assert matching_of(complete(2), (1, 0)).edges == ((0, 1),)
    F, fcl = folded_hypercube_classes(4)
    assert matching_of(F, tuple(v ^ 15 for v in range(16))) == cls(F, fcl[5])


def test_matching_of_rejects_bad_maps():
    G = hypercube(3)
    with pytest.raises(InvalidInput):
        matching_of(G, tuple(range(8)))
    with pytest.raises(InvalidInput):
        matching_of(G, tuple(v ^ 3 for v in range(8)))
    with pytest.raises(InvalidInput):
        matching_of(cycle(6), (1, 0, 3, 2, 5, 4))


def test_enumerate_nice_examples():
    G, cl = hypercube_classes(4)
    assert set(enumerate_nice(G)) == {cls(G, cl[i]) for i in range(1, 5)}
    assert enumerate_nice(folded_hypercube(4)).count == 5
    assert enumerate_nice(folded_hypercube(3)).count == 24
    assert enumerate_nice(complete_bipartite(4)).count == 24


def test_enumerate_nice_oracle():
    graphs = [cycle(4), cycle(6), complete(6), hypercube(3), folded_hypercube(3), enhanced_hypercube(3, 1)]
    for seed in range(60):
        graphs.append(random_graph_with_pm(seed, 4 + 2 * (seed % 5), p=0.5, connected=seed % 4 != 0)[0])
    for G in graphs:
        expect = [M for M in brute_perfect_matchings(G) if brute_is_nice(G, M)]
        assert list(enumerate_nice(G)) == expect
        assert all(is_nice(G, M) for M in expect)


def test_disconnected_componentwise():
    two_k2 = Graph(4, [(0, 1), (2, 3)])
    assert enumerate_nice(two_k2).count == 1
    G = Graph(8, list(cycle(4).edges) + [(u + 4, v + 4) for u, v in complete(4).edges])
    assert enumerate_nice(G).count == 2 * 3


def test_bijection_round_trip():
    for G in (hypercube(3), folded_hypercube(4), complete(6), enhanced_hypercube(4, 1)):
        invs = edge_involutions(G)
        nice = enumerate_nice(G)
        assert len(invs) == nice.count
        for a in invs:
            assert is_automorphism(G, a.alpha)
            assert involution_of(G, matching_of(G, a)) == a
        for M in nice:
            assert matching_of(G, involution_of(G, M)) == M


def test_nice_edges_join_equal_degrees():
    G = enhanced_hypercube(5, 2)
    for M in enumerate_nice(G):
        assert all(G.degree(u) == G.degree(v) for u, v in M.edges)


def test_nice_attains_quarter_bound():
    for G in (hypercube(3), complete(4), complete_bipartite(3), cycle(4), folded_hypercube(3)):
        q = bounds(G).quarter
        for M in enumerate_perfect_matchings(G):
            af = min_antiforcing(G, M, lexmin=False).value
            assert (af == q) == is_nice(G, M)


def test_equivalence_preserves_niceness():
    G = folded_hypercube(4)
    nice = enumerate_nice(G)
    for M in list(nice)[1:]:
        phi = are_equivalent(G, nice.matchings[0], M)
        assert phi is not None and is_automorphism(G, phi)
        assert nice.matchings[0].mapped(phi) == M
        assert is_nice(G, M.mapped(phi))


def test_are_equivalent_examples():
    G, cl = hypercube_classes(3)
    phi = are_equivalent(G, cls(G, cl[1]), cls(G, cl[2]))
    assert cls(G, cl[1]).mapped(phi) == cls(G, cl[2])
    F, fcl = folded_hypercube_classes(4)
    assert are_equivalent(F, cls(F, fcl[1]), cls(F, fcl[5])) is not None


def test_q41_two_kinds():
    FQ3, fcl = folded_hypercube_classes(3)
    P = cartesian_product(FQ3, complete(2))
    F1 = cls(FQ3, fcl[1])
    A = rho(P, F1)
    B = sigma(P, PerfectMatching((1, 0)))
    assert is_nice(P.graph, A) and is_nice(P.graph, B)
    assert are_equivalent(P.graph, A, B) is None
    # no invariant prefilter: the raw search must also come back empty
    assert find_isomorphism(P.graph, P.graph, A.partner, B.partner) is None


def test_equivalence_class_counts():
    for G, k in ((hypercube(3), 1), (folded_hypercube(4), 1), (enhanced_hypercube(4, 1), 2), (complete_bipartite(4), 1)):
        parts = equivalence_classes(G, enumerate_nice(G))
        assert len(parts) == k
        assert sorted(i for p in parts for i in p) == list(range(enumerate_nice(G).count))


def test_succession():
    G, cl = hypercube_classes(3)
    M = cls(G, cl[1])
    assert succession_check(G, M, [0, 1, 2, 3])
    assert succession_check(G, M, range(8)) == is_nice(G, M)
    K4M = PerfectMatching((1, 0, 3, 2))
    assert succession_check(complete(4), K4M, [0, 1])
    with pytest.raises(InvalidInput):
        succession_check(G, M, [0, 2])


@pytest.mark.parametrize("n, k, expected", [(4, 2, 5), (5, 3, 6), (5, 2, 26), (5, 1, 6), (6, 4, 7), (6, 3, 27), (6, 2, 7)])
def test_enhanced_nice_counts(n, k, expected):
    # n+1 for k = n-2 and k <= n-4, n+21 for k = n-3
    G = enhanced_hypercube(n, k)
    assert enumerate_nice(G).count == expected
    assert 4 * bounds(G).quarter == 4 * n * 2 ** (n - 2)
