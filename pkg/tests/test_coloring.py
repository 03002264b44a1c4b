import pytest
from hypothesis import given, settings

from maxmatch.coloring import (
    ChromaticIndexUndecided,
    ColoringError,
    EdgeColoring,
    VizingClass,
    chromatic_index,
    color_class_sizes,
    default_budget,
    iter_colorings,
    vizing_coloring,
)
from maxmatch.enumeration.oracles import brute_chromatic_index
from maxmatch.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    star_graph,
)
from maxmatch.matching import nu

from .helpers import all_graphs, graphs


@pytest.mark.parametrize(
    "g, chi, cls",
    [
        (complete_graph(3), 3, "II"),
        (complete_graph(4), 3, "I"),
        (complete_graph(5), 5, "II"),
        (complete_graph(6), 5, "I"),
        (petersen_graph(), 4, "II"),
        (cycle_graph(5), 3, "II"),
        (cycle_graph(6), 2, "I"),
        (star_graph(5), 5, "I"),
        (path_graph(2), 1, "I"),
    ],
)
def test_known_chromatic_indices(g, chi, cls):
    ci = chromatic_index(g)
    assert ci.chi == chi
    assert ci.vizing_class is VizingClass(cls)
    assert ci.witness.k == chi
    assert brute_chromatic_index(g) == chi


def test_class_sizes():
    assert color_class_sizes(chromatic_index(cycle_graph(6)).witness) == [3, 3]
    assert color_class_sizes(chromatic_index(complete_graph(4)).witness) == [2, 2, 2]


def test_edgeless_rejected():
    with pytest.raises(ColoringError):
        chromatic_index(Graph(3, frozenset()))


def test_improper_coloring_rejected():
    g = path_graph(3)
    with pytest.raises(ColoringError):
        EdgeColoring(g, {(0, 1): 0, (1, 2): 0}, 1)
    with pytest.raises(ColoringError):
        EdgeColoring(g, {(0, 1): 0}, 1)


def test_budget_exhaustion_raises():
    with pytest.raises(ChromaticIndexUndecided) as info:
        chromatic_index(petersen_graph(), budget=5)
    assert info.value.budget == 5


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("MAXMATCH_BUDGET", "123")
    assert default_budget() == 123
    monkeypatch.setenv("MAXMATCH_BUDGET", "lots")
    with pytest.raises(ValueError):
        default_budget()
    monkeypatch.delenv("MAXMATCH_BUDGET")
    assert default_budget() == 2_000_000


@settings(max_examples=150)
@given(graphs(max_n=10))
def test_vizing_coloring_is_proper_with_at_most_delta_plus_one(g):
    if g.m == 0:
        return
    col = vizing_coloring(g)  # EdgeColoring validates properness
    assert g.max_degree <= col.k <= g.max_degree + 1


@given(graphs(max_n=8))
def test_chromatic_index_within_vizing_bounds(g):
    if g.m == 0:
        return
    ci = chromatic_index(g)
    assert ci.chi in (g.max_degree, g.max_degree + 1)
    assert all(size <= nu(g) for size in color_class_sizes(ci.witness))


def test_agrees_with_brute_force_up_to_ten_edges():
    checked = 0
    for g in all_graphs(7):
        if 1 <= g.m <= 10:
            assert chromatic_index(g).chi == brute_chromatic_index(g), g
            checked += 1
    assert checked > 300


def test_iter_colorings_counts():
    assert sum(1 for _ in iter_colorings(cycle_graph(6), 2, 10_000)) == 1
    assert sum(1 for _ in iter_colorings(complete_graph(4), 3, 10_000)) == 1
    assert sum(1 for _ in iter_colorings(complete_graph(5), 5, 10_000)) == 6
    # two disjoint edges: {a}{b} or {a,b} with two colors available
    two_edges = disjoint_union(path_graph(2), path_graph(2))
    assert sum(1 for _ in iter_colorings(two_edges, 2, 100)) == 1
    assert sum(1 for _ in iter_colorings(cycle_graph(5), 2, 100)) == 0
