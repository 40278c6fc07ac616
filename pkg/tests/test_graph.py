import io

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ndes.graph import (
    EmptyGraphError,
    Graph,
    GraphFormatError,
    Partition,
    common_neighbors,
    format_edge_list,
    format_partition,
    load_edge_list,
    load_ground_truth,
    neighbors,
    read_edge_list,
)


def lines(*rows):
    return io.BytesIO(("\n".join(rows) + "\n").encode())


def test_load_path():
    g = load_edge_list(lines("a b", "b c"))
    assert (g.node_count, g.edge_count) == (3, 2)
    assert g.labels == ("a", "b", "c")
    assert neighbors(g, g.index_of("b")).tolist() == [0, 2]


def test_duplicates_and_self_loops_normalized():
    g, stats = read_edge_list(lines("1 2", "2 1", "1 1"))
    assert g.edge_count == 1
    assert stats.self_loops == 1
    assert stats.duplicates == 1


def test_comments_and_blank_lines_skipped():
    g = load_edge_list(lines("# snap header", "% pajek", "", "x y"))
    assert g.edge_count == 1


def test_text_stream_and_path(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("1 2\n2 3\n")
    assert load_edge_list(p) == load_edge_list(io.StringIO("1 2\n2 3\n"))


def test_malformed_line_reports_number():
    with pytest.raises(GraphFormatError, match="line 2"):
        load_edge_list(lines("a b", "a b c"))
    with pytest.raises(GraphFormatError) as info:
        load_edge_list(lines("# c", "a"))
    assert info.value.lineno == 2


@pytest.mark.parametrize("text", ["", "# only comments\n", "\n\n"])
def test_empty_input(text):
    with pytest.raises(EmptyGraphError):
        load_edge_list(io.StringIO(text))


def test_karate_counts_match_networkx(karate):
    g, truth = karate
    ref = nx.karate_club_graph()
    assert (g.node_count, g.edge_count) == (34, 78)
    assert {tuple(sorted((int(g.label_of(x)) - 1, int(g.label_of(y)) - 1))) for x, y in g.edges()} == {
        tuple(sorted(e)) for e in ref.edges()
    }


def test_ground_truth_basic():
    g = load_edge_list(lines("a b", "b c"))
    p = load_ground_truth(lines("a b", "c"), g)
    assert p.assignment.tolist() == [0, 0, 1]
    assert p.community_count == 2


def test_karate_truth_sizes(karate):
    _, truth = karate
    assert truth.community_count == 2
    assert sorted(truth.sizes.tolist()) == [16, 18]


def test_ground_truth_errors():
    g = load_edge_list(lines("a b", "b c"))
    with pytest.raises(GraphFormatError, match="zz"):
        load_ground_truth(lines("a b", "c zz"), g)
    with pytest.raises(GraphFormatError, match="'b'"):
        load_ground_truth(lines("a b", "b c"), g)
    with pytest.raises(GraphFormatError, match="not in any community"):
        load_ground_truth(lines("a b"), g)


def test_neighbors(triangle, star):
    assert neighbors(triangle, 0).tolist() == [1, 2]
    assert neighbors(star, 0).tolist() == [1, 2, 3]
    iso = Graph.from_edges([(0, 1)], node_count=3)
    assert neighbors(iso, 2).tolist() == []
    with pytest.raises(IndexError):
        neighbors(iso, 3)
    with pytest.raises(ValueError):
        neighbors(iso, 0)[0] = 5  # read-only view


def test_common_neighbors(triangle, path3, k4):
    assert common_neighbors(triangle, 0, 1).tolist() == [2]
    assert common_neighbors(path3, 0, 1).tolist() == []
    assert common_neighbors(path3, 0, 2).tolist() == [1]
    brute = sorted(set(neighbors(k4, 0).tolist()) & set(neighbors(k4, 1).tolist()))
    assert common_neighbors(k4, 0, 1).tolist() == brute == [2, 3]
    with pytest.raises(IndexError):
        common_neighbors(k4, 0, 9)


def test_constructor_rejects_invalid_csr():
    with pytest.raises(ValueError, match="symmetric"):
        Graph([0, 1, 1], [1])
    with pytest.raises(ValueError, match="self-loop"):
        Graph([0, 1], [0])
    with pytest.raises(ValueError, match="ascending"):
        Graph([0, 2, 3, 4], [2, 1, 0, 0])


def test_graph_is_immutable(k4):
    with pytest.raises(ValueError):
        k4.indices[0] = 3
    with pytest.raises(AttributeError):
        k4.foo = 1


def test_partition_invariants():
    with pytest.raises(ValueError):
        Partition(np.array([0, 2]), 3)  # community 1 unused
    with pytest.raises(ValueError):
        Partition(np.array([0, 1]), 1)
    p = Partition.from_labels(["x", "y", "x"])
    assert p.assignment.tolist() == [0, 1, 0]
    assert [c.tolist() for c in p.communities()] == [[0, 2], [1]]


def test_partition_roundtrip(two_triangles):
    p = Partition.from_communities([[3, 4, 5], [0, 1, 2]], 6)
    text = format_partition(p, two_triangles)
    assert load_ground_truth(io.StringIO(text), two_triangles) == p


edge_lists = st.lists(
    st.tuples(st.integers(0, 14), st.integers(0, 14)), min_size=1, max_size=60
)


@settings(max_examples=150, deadline=None)
@given(edge_lists)
def test_graph_invariants(edges):
    text = "".join(f"n{u} n{v}\n" for u, v in edges)
    if all(u == v for u, v in edges):
        g = load_edge_list(io.StringIO(text))
        assert g.edge_count == 0
        return
    g = load_edge_list(io.StringIO(text))
    adj = {x: set(g.neighbors(x).tolist()) for x in range(g.node_count)}
    for x in adj:
        assert x not in adj[x]
        nb = g.neighbors(x).tolist()
        assert nb == sorted(set(nb))
        for y in adj[x]:
            assert x in adj[y]
    assert g.degrees.sum() == 2 * g.edge_count
    expected = {frozenset((f"n{u}", f"n{v}")) for u, v in edges if u != v}
    assert {frozenset((g.label_of(x), g.label_of(y))) for x, y in g.edges()} == expected

    # round trip through the text format
    again = load_edge_list(io.StringIO(format_edge_list(g)))
    assert {frozenset((again.label_of(x), again.label_of(y))) for x, y in again.edges()} == expected

    for x in range(g.node_count):
        for y in range(g.node_count):
            cn = common_neighbors(g, x, y).tolist()
            assert cn == common_neighbors(g, y, x).tolist()
            assert cn == sorted(adj[x] & adj[y])
            assert x not in cn and y not in cn
