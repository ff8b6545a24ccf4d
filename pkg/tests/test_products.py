import pytest
from oracles import brute_theta_classes

from antiforce.construction import random_graph_with_pm
from antiforce.errors import InvalidInput
from antiforce.generators import (
    complete,
    complete_bipartite,
    cycle,
    enhanced_hypercube,
    folded_hypercube,
    hypercube,
    hypercube_classes,
)
from antiforce.graph import Graph
from antiforce.nice import enumerate_nice
from antiforce.products import (
    cartesian_product,
    is_isomorphic,
    layer,
    prime_by_theta,
    product_of,
    rho,
    sigma,
    theta_partition,
)

K2 = complete(2)


def test_product_examples():
    assert cartesian_product(K2, K2).graph == cycle(4).relabel([0, 1, 3, 2])
    # equal under the id convention, not just isomorphic
    assert product_of(K2, K2, K2) == hypercube(3)
    assert product_of(K2, K2, K2, K2) == hypercube(4)
    P = cartesian_product(folded_hypercube(3), K2).graph
    assert is_isomorphic(enhanced_hypercube(4, 1), P) is not None


def test_coords():
    P = cartesian_product(cycle(4), complete(3))
    for v in range(P.graph.n):
        assert P.vertex(*P.coords(v)) == v


def test_layers():
    P = cartesian_product(K2, K2)
    for a in range(4):
        assert layer(P, 1, a)[1] == K2
        assert layer(P, 2, a)[1] == K2
    P = cartesian_product(folded_hypercube(3), K2)
    for a in range(P.graph.n):
        verts, H = layer(P, 1, a)
        assert H == folded_hypercube(3) and a in verts
    G = cycle(6)
    P = cartesian_product(G, Graph(1))
    assert P.graph == G and layer(P, 1, 0)[1] == G
    with pytest.raises(InvalidInput):
        layer(P, 3, 0)
    with pytest.raises(InvalidInput):
        layer(P, 1, 99)


def test_rho_sigma_nice_images():
    G1, G2 = cycle(4), complete(4)
    P = cartesian_product(G1, G2)
    prod = set(enumerate_nice(P.graph))
    images = {rho(P, M) for M in enumerate_nice(G1)} | {sigma(P, M) for M in enumerate_nice(G2)}
    assert images == prod
    assert len(prod) == enumerate_nice(G1).count + enumerate_nice(G2).count


def test_theta_examples():
    T = theta_partition(cycle(6))
    assert T.count == 3
    for c in T.classes():
        (a, b), (x, y) = sorted(c)
        # antipodal edges of C6
        assert {a, b, x, y} == {a, b, (a + 3) % 6, (b + 3) % 6}
    assert theta_partition(cycle(5)).count == 1
    G, cl = hypercube_classes(3)
    assert sorted(theta_partition(G).classes(), key=min) == [cl[1], cl[2], cl[3]]


def test_theta_oracle():
    graphs = [cycle(6), cycle(7), complete(4), hypercube(3), folded_hypercube(4), complete_bipartite(2, 3)]
    graphs += [random_graph_with_pm(s, 8, p=0.3)[0] for s in range(15)]
    for G in graphs:
        assert sorted(theta_partition(G).classes(), key=min) == brute_theta_classes(G)


def test_theta_witness_log():
    T = theta_partition(folded_hypercube(4))
    for i, j, (a, b, c, d) in T.witnesses:
        assert a + b != c + d
    # each merge lowers the class count by one
    assert len(T.witnesses) == len(T.edges) - T.count


def test_theta_disconnected():
    with pytest.raises(InvalidInput):
        theta_partition(Graph(4, [(0, 1), (2, 3)]))


def test_prime():
    assert prime_by_theta(folded_hypercube(4)) == "prime"
    assert prime_by_theta(folded_hypercube(5)) == "prime"
    assert prime_by_theta(complete_bipartite(3)) == "prime"
    assert prime_by_theta(cycle(6)) == "inconclusive"
    assert prime_by_theta(hypercube(3)) == "inconclusive"


def test_isomorphism():
    assert is_isomorphic(enhanced_hypercube(2, 1), cycle(4)) is not None
    assert is_isomorphic(complete(4), complete_bipartite(2)) is None
    assert is_isomorphic(folded_hypercube(3), complete_bipartite(4)) is not None
    assert is_isomorphic(hypercube(3), folded_hypercube(3)) is None
    G = folded_hypercube(4)
    perm = [(v * 5 + 3) % 16 for v in range(16)]
    phi = is_isomorphic(G, G.relabel(perm))
    assert G.relabel(phi) == G.relabel(perm)
