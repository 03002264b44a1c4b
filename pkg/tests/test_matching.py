import pytest
from hypothesis import given

from maxmatch.enumeration.oracles import brute_nu
from maxmatch.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    is_connected,
    path_graph,
    petersen_graph,
    star_graph,
)
from maxmatch.matching import (
    Matching,
    essential_vertices,
    is_factor_critical,
    max_matching,
    nu,
    nu_without,
    stats,
)

from .helpers import all_graphs, graphs


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_graph(4), 2),
        (cycle_graph(5), 2),
        (petersen_graph(), 5),
        (star_graph(6), 1),
        (path_graph(7), 3),
        (Graph(3, frozenset()), 0),
        (disjoint_union(complete_graph(3), complete_graph(3)), 2),
    ],
)
def test_known_matching_numbers(g, expected):
    assert nu(g) == expected
    assert brute_nu(g) == expected


def test_matching_is_valid_and_deterministic():
    g = petersen_graph()
    m1, m2 = max_matching(g), max_matching(g)
    assert m1 == m2
    assert len(m1.covered) == 2 * len(m1)


def test_invalid_matching_rejected():
    with pytest.raises(ValueError):
        Matching(path_graph(3), frozenset({(0, 1), (1, 2)}))
    with pytest.raises(ValueError):
        Matching(path_graph(3), frozenset({(0, 2)}))


def test_stats():
    s = stats(disjoint_union(star_graph(3), Graph(1, frozenset())))
    assert (s.delta, s.nu, s.m, s.isolated) == (3, 1, 3, (4,))


def test_essential_vertices_examples():
    assert essential_vertices(star_graph(4)) == {0}
    assert essential_vertices(cycle_graph(5)) == frozenset()
    assert essential_vertices(path_graph(3)) == {1}
    assert essential_vertices(complete_graph(4)) == set(range(4))


def test_factor_critical_examples():
    assert is_factor_critical(complete_graph(3))
    assert is_factor_critical(complete_graph(1))
    assert is_factor_critical(cycle_graph(7))
    assert not is_factor_critical(complete_graph(4))  # even order
    assert not is_factor_critical(star_graph(2))  # centre removal leaves two singletons
    assert not is_factor_critical(disjoint_union(complete_graph(3), complete_graph(3), complete_graph(1)))


def test_factor_critical_certificates_are_perfect_matchings():
    g = complete_graph(5)
    fc = is_factor_critical(g)
    assert set(fc.certificates) == set(range(5))
    for x, pm in fc.certificates.items():
        assert x not in {v for e in pm for v in e}
        assert len(pm) == 2 and pm <= g.edges


def test_agrees_with_brute_force_on_small_graphs():
    checked = 0
    for g in all_graphs(7):
        if g.m <= 12:
            assert nu(g) == brute_nu(g), g
            checked += 1
    assert checked > 500


@given(graphs(max_n=9))
def test_vertex_deletion_drops_nu_by_at_most_one(g):
    size = nu(g)
    for x in range(g.n):
        h, _ = delete_vertex(g, x)
        assert nu_without(g, x) == nu(h)
        assert size - 1 <= nu(h) <= size


@given(graphs(max_n=9))
def test_matching_bounded_by_half_order(g):
    assert 2 * nu(g) <= g.n
    assert len(max_matching(g)) == nu(g)


def test_no_essential_vertex_iff_factor_critical():
    for g in all_graphs(7):
        if g.n < 2 or not is_connected(g):
            continue
        no_essential = not essential_vertices(g)
        assert no_essential == bool(is_factor_critical(g)), g
        if no_essential:
            assert g.n == 2 * nu(g) + 1
