import pytest

from antiforce.errors import FormatError, InvalidInput
from antiforce.generators import complete, cycle, folded_hypercube, hypercube
from antiforce.graph import (
    INF,
    Graph,
    all_pairs_distances,
    bipartition,
    format_graph,
    from_edge_list,
    induced_subgraph,
    is_isometric_subgraph,
    parse_graph,
    read_graph,
    write_graph,
)


def test_from_edge_list_cycle():
    G = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert G.e == 4
    assert G.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert G == cycle(4)


def test_from_edge_list_k2():
    G = from_edge_list(2, [(0, 1)])
    assert G == complete(2)
    assert G.degrees() == [1, 1]


def test_loop_rejected():
    with pytest.raises(InvalidInput):
        from_edge_list(3, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(InvalidInput):
        from_edge_list(3, [(0, 3)])


def test_duplicates_collapse():
    assert from_edge_list(3, [(0, 1), (1, 0), (0, 1)]).e == 1


def test_distances():
    assert all_pairs_distances(cycle(4))[0][2] == 2
    assert all_pairs_distances(hypercube(3))[0b000][0b111] == 3
    two_k2 = Graph(4, [(0, 1), (2, 3)])
    assert all_pairs_distances(two_k2)[0][2] == INF


def test_distances_symmetric():
    d = all_pairs_distances(folded_hypercube(4))
    assert all(d[i][j] == d[j][i] for i in range(16) for j in range(16))
    # diameter of FQ_4 is 2
    assert max(max(r) for r in d) == 2


def test_induced_subgraph():
    H, remap = induced_subgraph(complete(4), [1, 3])
    assert H == complete(2) and remap == [1, 3]
    Q3 = hypercube(3)
    assert induced_subgraph(Q3, range(8))[0] == Q3
    # two E1 edges 01 and 23 span a 4-cycle
    H, _ = induced_subgraph(Q3, [0, 1, 2, 3])
    assert H == cycle(4).relabel([0, 1, 3, 2])


def test_induced_subgraph_bad_vertex():
    with pytest.raises(InvalidInput):
        induced_subgraph(cycle(4), [0, 9])


def test_bipartition():
    assert bipartition(cycle(4)) == (frozenset({0, 2}), frozenset({1, 3}))
    assert bipartition(complete(4)) is None
    assert bipartition(folded_hypercube(4)) is None
    assert bipartition(folded_hypercube(3)) is not None


def test_isometric():
    FQ4 = folded_hypercube(4)
    assert is_isometric_subgraph(FQ4, [0, 1, 3, 2])
    assert is_isometric_subgraph(FQ4, range(16), FQ4.edges)
    # 5-cycle through the complementary edge 0-15
    five = [(0, 15), (14, 15), (6, 14), (2, 6), (0, 2)]
    assert is_isometric_subgraph(FQ4, [0, 15, 14, 6, 2], five)
    # plain 6-cycle of Q4: antipodes 0 and 7 are at distance 3 on the
    # cycle but 2 in FQ4 via 0-15-7
    six = [(0, 1), (1, 3), (3, 7), (6, 7), (4, 6), (0, 4)]
    assert not is_isometric_subgraph(FQ4, [0, 1, 3, 7, 6, 4], six)


def test_isometric_rejects_non_subgraph():
    with pytest.raises(InvalidInput):
        is_isometric_subgraph(cycle(4), [0, 1, 2], [(0, 2)])


def test_text_round_trip(tmp_path):
    G = folded_hypercube(3)
    assert parse_graph(format_graph(G)) == G
    path = tmp_path / "g.txt"
    write_graph(G, path)
    assert read_graph(path) == G


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 1\n0 x\n", 2),
        ("3 2\n0 1\n", 3),
        ("3 1\n1 1\n", 2),
        ("3 1\n0 5\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("a b\n", 1),
    ],
)
def test_parse_errors_name_line(text, line):
    with pytest.raises(FormatError) as info:
        parse_graph(text)
    assert info.value.lineno == line
    assert str(info.value).startswith(f"line {line}:")


def test_empty_file():
    with pytest.raises(FormatError):
        parse_graph("")
