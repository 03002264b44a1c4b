"""Proper edge colorings.

``vizing_coloring`` is the Misra-Gries fan/path-flip construction and never
uses more than Delta+1 colors.  ``chromatic_index`` decides between Delta and
Delta+1 by exhaustive backtracking and fails loudly when its node budget runs
out instead of guessing.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .graph import Edge, Graph
from .matching import nu

DEFAULT_BUDGET = 2_000_000
BUDGET_ENV = "MAXMATCH_BUDGET"


class ColoringError(ValueError):
    """Input a coloring routine cannot handle (e.g. no edges)."""


class ChromaticIndexUndecided(RuntimeError):
    """The exact search hit its node budget before reaching a verdict."""

    def __init__(self, budget: int):
        super().__init__(f"chromatic index undecided: search exceeded {budget} nodes")
        self.budget = budget


class VizingClass(enum.Enum):
    CLASS_I = "I"
    CLASS_II = "II"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
        if value <= 0:
            raise ValueError(f"{BUDGET_ENV} must be positive")
        return value
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class EdgeColoring:
    host: Graph = field(repr=False)
    color_of: Mapping[Edge, int]
    k: int

    def __post_init__(self) -> None:
        if set(self.color_of) != set(self.host.edges):
            raise ColoringError("coloring must cover exactly the host's edges")
        seen: dict[tuple[int, int], Edge] = {}
        for e, c in self.color_of.items():
            if not 0 <= c < self.k:
                raise ColoringError(f"color {c} of {e} outside 0..{self.k - 1}")
            for v in e:
                if (v, c) in seen:
                    raise ColoringError(f"edges {seen[(v, c)]} and {e} share color {c} at {v}")
                seen[(v, c)] = e

    def color_class(self, i: int) -> frozenset[Edge]:
        return frozenset(e for e, c in self.color_of.items() if c == i)

    def classes(self) -> list[frozenset[Edge]]:
        return [self.color_class(i) for i in range(self.k)]


def color_class_sizes(c: EdgeColoring) -> list[int]:
    return sorted((len(cls) for cls in c.classes()), reverse=True)


def _compact(g: Graph, colors: dict[Edge, int]) -> EdgeColoring:
    used = sorted(set(colors.values()))
    relabel = {c: i for i, c in enumerate(used)}
    return EdgeColoring(g, {e: relabel[c] for e, c in colors.items()}, len(used))


# -- Misra-Gries -----------------------------------------------------------------

class _FanColorer:
    def __init__(self, g: Graph):
        self.g = g
        self.palette = range(g.max_degree + 1)
        self.at: list[dict[int, int]] = [{} for _ in range(g.n)]  # vertex -> color -> neighbor
        self.color: dict[Edge, int] = {}

    def free(self, v: int) -> int:
        return next(c for c in self.palette if c not in self.at[v])

    def is_free(self, v: int, c: int) -> bool:
        return c not in self.at[v]

    def set(self, u: int, v: int, c: int) -> None:
        self.color[(min(u, v), max(u, v))] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def unset(self, u: int, v: int) -> int:
        c = self.color.pop((min(u, v), max(u, v)))
        del self.at[u][c]
        del self.at[v][c]
        return c

    def edge_color(self, u: int, v: int) -> int | None:
        return self.color.get((min(u, v), max(u, v)))

    def fan(self, u: int, v: int) -> list[int]:
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            for w in self.g.adjacency[u]:
                if w in in_fan:
                    continue
                c = self.edge_color(u, w)
                if c is not None and self.is_free(fan[-1], c):
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        return fan

    def invert_path(self, u: int, c: int, d: int) -> None:
        # maximal path from u alternating d, c, d, ...; c is free at u
        path = [u]
        want, other = d, c
        while want in self.at[path[-1]]:
            path.append(self.at[path[-1]][want])
            want, other = other, want
        cols = [self.unset(path[i], path[i + 1]) for i in range(len(path) - 1)]
        for i, col in enumerate(cols):
            self.set(path[i], path[i + 1], d if col == c else c)

    def color_edge(self, u: int, v: int) -> None:
        fan = self.fan(u, v)
        c = self.free(u)
        d = self.free(fan[-1])
        self.invert_path(u, c, d)
        # longest valid fan prefix ending at a vertex where d is free
        w = None
        for i, f in enumerate(fan):
            if i > 0:
                ci = self.edge_color(u, f)
                if ci is None or not self.is_free(fan[i - 1], ci):
                    break
            if self.is_free(f, d):
                w = i
                break
        if w is None:
            raise AssertionError("Misra-Gries invariant broken: no rotatable fan prefix")
        for i in range(w):
            nxt = self.unset(u, fan[i + 1])
            self.set(u, fan[i], nxt)
        self.set(u, fan[w], d)


def vizing_coloring(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most Delta+1 colors."""
    if g.m == 0:
        raise ColoringError("graph has no edges")
    fc = _FanColorer(g)
    for u, v in g.sorted_edges:
        fc.color_edge(u, v)
    out = _compact(g, fc.color)
    assert out.k <= g.max_degree + 1
    return out


# -- exact search ----------------------------------------------------------------

@dataclass(frozen=True)
class ChromaticIndex:
    chi: int
    witness: EdgeColoring
    vizing_class: VizingClass


def _search_order(g: Graph) -> tuple[list[Edge], int]:
    """Edges of the lowest-id maximum-degree vertex first, then by degree sum."""
    deg = g.degrees
    anchor = deg.index(g.max_degree)
    first = [(min(anchor, w), max(anchor, w)) for w in g.adjacency[anchor]]
    rest = sorted(
        (e for e in g.edges if anchor not in e),
        key=lambda e: (-(deg[e[0]] + deg[e[1]]), e[0], e[1]),
    )
    return first + rest, len(first)


def _find_k_coloring(g: Graph, k: int, budget: int) -> dict[Edge, int] | None:
    order, fixed = _search_order(g)
    if fixed > k:
        return None
    limit = nu(g)
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(order):
        incident[u].append(i)
        incident[v].append(i)
    full = (1 << k) - 1
    used = [0] * g.n
    count = [0] * k
    assign = [-1] * len(order)
    nodes = 0

    def place(i: int, c: int) -> None:
        u, v = order[i]
        used[u] |= 1 << c
        used[v] |= 1 << c
        count[c] += 1
        assign[i] = c

    def unplace(i: int, c: int) -> None:
        u, v = order[i]
        used[u] &= ~(1 << c)
        used[v] &= ~(1 << c)
        count[c] -= 1
        assign[i] = -1

    def dead_neighbor(i: int) -> bool:
        for end in order[i]:
            for j in incident[end]:
                if assign[j] == -1:
                    a, b = order[j]
                    if (used[a] | used[b]) == full:
                        return True
        return False

    # colors are interchangeable, so the anchor's edges get 0..fixed-1
    for i in range(fixed):
        place(i, i)

    def dfs(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        nodes += 1
        if nodes > budget:
            raise ChromaticIndexUndecided(budget)
        u, v = order[i]
        free = ~(used[u] | used[v]) & full
        c = 0
        while free:
            if free & 1 and count[c] < limit:
                place(i, c)
                if not dead_neighbor(i) and dfs(i + 1):
                    return True
                unplace(i, c)
            free >>= 1
            c += 1
        return False

    if any(dead_neighbor(i) for i in range(fixed)):
        return None
    if not dfs(fixed):
        return None
    return {e: assign[i] for i, e in enumerate(order)}


def chromatic_index(g: Graph, budget: int | None = None) -> ChromaticIndex:
    """Exact edge chromatic index with a witness coloring.

    Raises ChromaticIndexUndecided if no verdict is reached within ``budget``
    search nodes.
    """
    if g.m == 0:
        raise ColoringError("graph has no edges")
    if budget is None:
        budget = default_budget()
    delta = g.max_degree
    # each color class is a matching, so more than delta*nu edges rules out delta colors
    found = None
    if g.m <= delta * nu(g):
        found = _find_k_coloring(g, delta, budget)
    if found is not None:
        witness = EdgeColoring(g, found, delta)
        return ChromaticIndex(delta, witness, VizingClass.CLASS_I)
    witness = vizing_coloring(g)
    if witness.k != delta + 1:
        raise AssertionError("fan construction used fewer colors than the exact search allows")
    return ChromaticIndex(delta + 1, witness, VizingClass.CLASS_II)


def iter_colorings(g: Graph, k: int, budget: int) -> Iterator[EdgeColoring]:
    """Every proper k-coloring of ``g`` up to permutation of the colors.

    Colors are introduced in order along the sorted edge list, so each
    partition of the edge set into k matchings is produced once.  Raises
    ChromaticIndexUndecided when more than ``budget`` nodes are visited.
    """
    order = list(g.sorted_edges)
    used = [0] * g.n
    assign = [0] * len(order)
    nodes = 0

    def rec(i: int, opened: int) -> Iterator[EdgeColoring]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ChromaticIndexUndecided(budget)
        if len(order) - i < k - opened:
            return
        if i == len(order):
            yield EdgeColoring(g, dict(zip(order, assign)), k)
            return
        u, v = order[i]
        blocked = used[u] | used[v]
        for c in range(min(opened + 1, k)):
            if blocked >> c & 1:
                continue
            used[u] |= 1 << c
            used[v] |= 1 << c
            assign[i] = c
            yield from rec(i + 1, max(opened, c + 1))
            used[u] &= ~(1 << c)
            used[v] &= ~(1 << c)

    yield from rec(0, 0)
