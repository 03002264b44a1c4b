import pytest
from hypothesis import given

from maxmatch.graph import (
    Graph,
    GraphError,
    GraphFormatError,
    complete_graph,
    components,
    cycle_graph,
    degree,
    delete_vertex,
    disjoint_union,
    drop_isolated,
    empty_graph,
    induced_subgraph,
    is_connected,
    parse_edge_list,
    parse_graph6,
    path_graph,
    petersen_graph,
    relabel,
    star_graph,
    write_edge_list,
    write_graph6,
)

from .helpers import all_graphs, graphs


def test_edges_are_normalized():
    g = Graph.from_edges(3, [(1, 0), (2, 1)])
    assert g.sorted_edges == ((0, 1), (1, 2))
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphError):
        Graph.from_edges(3, edges)


def test_degree_and_stats():
    g = star_graph(4)
    assert degree(g, 0) == 4 and degree(g, 3) == 1
    assert g.max_degree == 4
    assert petersen_graph().degrees == (3,) * 10


def test_delete_vertex_relabels_ascending():
    h, vmap = delete_vertex(path_graph(4), 1)
    assert vmap == [0, 2, 3]
    assert h.sorted_edges == ((1, 2),)


def test_induced_subgraph():
    h, vmap = induced_subgraph(complete_graph(5), [4, 1, 2])
    assert vmap == [1, 2, 4] and h.m == 3


def test_components_ordered_by_smallest_vertex():
    g = Graph.from_edges(6, [(3, 5), (0, 4)])
    comps = components(g)
    assert [vmap for _, vmap in comps] == [[0, 4], [1], [2], [3, 5]]
    assert not is_connected(g) and is_connected(cycle_graph(5))


def test_drop_isolated_and_union():
    g = disjoint_union(complete_graph(3), empty_graph(2), complete_graph(2))
    assert g.n == 7 and g.isolated_vertices() == [3, 4]
    h, vmap = drop_isolated(g)
    assert h.n == 5 and vmap == [0, 1, 2, 5, 6]


def test_graph6_known_values():
    assert write_graph6(Graph(1, frozenset())) == b"@"
    assert write_graph6(empty_graph(0)) == b"?"
    assert write_graph6(complete_graph(4)) == b"C~"
    assert write_graph6(complete_graph(5)) == b"D~{"
    assert write_graph6(petersen_graph()) == b"IheA@GUAo"


def test_graph6_header_and_newline():
    assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)
    assert parse_graph6(b"D~{") == complete_graph(5)


def test_graph6_largest_supported_order():
    g = cycle_graph(62)
    data = write_graph6(g)
    assert data[0] == 62 + 63
    assert parse_graph6(data) == g
    with pytest.raises(GraphFormatError):
        write_graph6(cycle_graph(63))


@pytest.mark.parametrize("bad", [b"", b"C", b"C~~", b"C\x7f", b"Bx", b"~"])
def test_graph6_rejects_garbage(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_graph6_error_carries_offset():
    with pytest.raises(GraphFormatError) as info:
        parse_graph6(b"C~ ")
    assert info.value.offset == 2


def test_graph6_roundtrip_all_small():
    for g in all_graphs(7):
        assert parse_graph6(write_graph6(g)) == g


def test_edge_list_roundtrip_and_comments():
    text = "# triangle plus isolated\nn 4\n\n0 1\n1 2\n2 0\n"
    g = parse_edge_list(text)
    assert g.n == 4 and g.m == 3
    assert parse_edge_list(write_edge_list(g)) == g
    assert parse_edge_list("0 1\n1 2").n == 3


@pytest.mark.parametrize(
    "text, line",
    [("0 1\n1 1\n", 2), ("0 1\n0 1\n", 2), ("n 2\n0 2\n", 2), ("0 x\n", 1), ("0 -1\n", 1)],
)
def test_edge_list_errors_name_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list(text)
    assert info.value.line == line


@given(graphs(max_n=9))
def test_handshake(g):
    assert sum(g.degrees) == 2 * g.m


@given(graphs(max_n=9))
def test_graph6_roundtrip_property(g):
    assert parse_graph6(write_graph6(g)) == g


@given(graphs(max_n=8))
def test_relabel_reverse_twice_is_identity(g):
    perm = list(reversed(range(g.n)))
    assert relabel(relabel(g, perm), perm) == g


@given(graphs(max_n=8))
def test_components_partition(g):
    comps = components(g)
    assert sum(h.n for h, _ in comps) == g.n
    assert sum(h.m for h, _ in comps) == g.m
    assert all(is_connected(h) for h, _ in comps)
