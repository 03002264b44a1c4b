"""Edge bounds in terms of maximum degree and matching number, and graphs
attaining them.

Throughout, ``half_up = ceil(delta / 2)`` and ``half_down = floor(delta / 2)``.
The sharp bound is ``delta*nu + floor(nu / half_up) * half_down``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Graph, complete_graph, disjoint_union, drop_isolated, star_graph
from .matching import is_factor_critical, nu


class ExtremalError(ValueError):
    pass


class UniqueGraphError(ExtremalError):
    """No second attaining graph exists for these parameters."""


def _check(delta: int, nu_: int) -> None:
    for name, value in (("delta", delta), ("nu", nu_)):
        if not isinstance(value, int) or value < 1:
            raise ExtremalError(f"{name} must be a positive integer, got {value!r}")


def _half_up(delta: int) -> int:
    return (delta + 1) // 2


@dataclass(frozen=True)
class ExtremalSpec:
    delta: int
    nu: int

    def __post_init__(self) -> None:
        _check(self.delta, self.nu)

    @property
    def copies(self) -> int:
        """Number of extremal blocks, floor(nu / ceil(delta/2))."""
        return self.nu // _half_up(self.delta)

    @property
    def t(self) -> int:
        return self.nu - _half_up(self.delta) * self.copies

    @property
    def divisible(self) -> bool:
        return self.t == 0

    @property
    def bound(self) -> int:
        return edge_bound(self.delta, self.nu)


def edge_bound(delta: int, nu: int) -> int:
    _check(delta, nu)
    return delta * nu + (nu // _half_up(delta)) * (delta // 2)


def edge_bound_relaxed(delta: int, nu: int) -> Fraction:
    _check(delta, nu)
    return nu * (delta + Fraction(delta // 2, _half_up(delta)))


def c_edge_count(delta: int) -> int:
    return (2 * _half_up(delta) + 1) * delta // 2


def _verify(g: Graph, delta: int, nu_: int, m: int, what: str) -> Graph:
    got = (g.max_degree, nu(g), g.m)
    if got != (delta, nu_, m):
        raise AssertionError(f"{what}: expected (delta, nu, m)={(delta, nu_, m)}, got {got}")
    if g.isolated_vertices():
        raise AssertionError(f"{what}: produced isolated vertices")
    return g


def construct_c(delta: int) -> Graph:
    """The connected extremal graph with nu = ceil(delta/2).

    Even delta: K_{delta+1}.  Odd delta = 2j-1: K_{2j} minus the perfect
    matching {2i, 2i+1}, plus an apex (vertex 2j) joined to 0..2j-2, so
    vertex 2j-1 is the only vertex of degree 2j-2.
    """
    if not isinstance(delta, int) or delta < 2:
        raise ExtremalError(f"delta must be an integer >= 2, got {delta!r}")
    if delta % 2 == 0:
        g = complete_graph(delta + 1)
    else:
        size = delta + 1
        base = [(u, v) for u, v in combinations(range(size), 2) if not (u % 2 == 0 and v == u + 1)]
        apex = [(v, size) for v in range(size - 1)]
        g = Graph.from_edges(size + 1, base + apex)
    _verify(g, delta, _half_up(delta), c_edge_count(delta), f"construct_c({delta})")
    if not is_factor_critical(g):
        raise AssertionError(f"construct_c({delta}) is not factor-critical")
    return g


def construct_attaining(delta: int, nu_: int) -> Graph:
    """A graph with max degree ``delta``, matching number ``nu_`` and
    ``edge_bound(delta, nu_)`` edges: t stars K_{1,delta} followed by
    floor(nu/ceil(delta/2)) copies of construct_c(delta).
    """
    _check(delta, nu_)
    if delta == 1:
        g = disjoint_union(*[complete_graph(2)] * nu_)
    elif nu_ == 1:
        g = complete_graph(3) if delta == 2 else star_graph(delta)
    else:
        spec = ExtremalSpec(delta, nu_)
        parts = [star_graph(delta)] * spec.t + [construct_c(delta)] * spec.copies
        g = disjoint_union(*parts)
    return _verify(g, delta, nu_, edge_bound(delta, nu_), f"construct_attaining({delta}, {nu_})")


def _odd_cycle_with_chords(order: int, cap: int, target: int) -> Graph:
    """Hamiltonian cycle on ``order`` vertices plus chords up to ``target``
    edges, every degree at most ``cap``.  Greedy in lexicographic chord
    order, with backtracking when greedy falls short.
    """
    cycle = [(i, (i + 1) % order) for i in range(order)]
    chords = [
        (u, v) for u, v in combinations(range(order), 2)
        if v - u not in (1, order - 1)
    ]
    need = target - order
    if need < 0:
        raise ExtremalError("edge target below the cycle length")
    deg = [2] * order
    chosen: list[tuple[int, int]] = []

    def room() -> int:
        return sum(cap - d for d in deg) // 2

    def pick(i: int) -> bool:
        if len(chosen) == need:
            return True
        if need - len(chosen) > min(room(), len(chords) - i):
            return False
        for j in range(i, len(chords)):
            u, v = chords[j]
            if deg[u] < cap and deg[v] < cap:
                deg[u] += 1
                deg[v] += 1
                chosen.append((u, v))
                if pick(j + 1):
                    return True
                chosen.pop()
                deg[u] -= 1
                deg[v] -= 1
        return False

    if not pick(0):
        raise ExtremalError(f"no degree-{cap} chord set reaches {target} edges on {order} vertices")
    return Graph.from_edges(order, cycle + chosen)


def construct_alternative(delta: int, nu_: int) -> Graph:
    """A second attaining graph, not isomorphic to ``construct_attaining``.

    Exists exactly when ceil(delta/2) does not divide nu.  With t >= 2 stars,
    one star edge is moved so the star's center hangs onto a leaf of another
    star.  With t = 1, the star and one extremal block are replaced by one
    factor-critical graph on 2*(ceil(delta/2)+1)+1 vertices: an odd
    Hamiltonian cycle plus degree-capped chords.
    """
    _check(delta, nu_)
    if delta < 2 or nu_ < 2:
        raise ExtremalError("alternative constructions need delta >= 2 and nu >= 2")
    spec = ExtremalSpec(delta, nu_)
    if spec.divisible:
        raise UniqueGraphError(
            f"graph is unique, no alternative exists: ceil({delta}/2) divides {nu_}"
        )
    blocks = [construct_c(delta)] * spec.copies
    if spec.t >= 2:
        # stars on 0..delta (center 0) and delta+1..2*delta+1 (center delta+1)
        first, second = star_graph(delta), star_graph(delta)
        pair = disjoint_union(first, second)
        moved = (pair.edges - {(0, delta)}) | {(0, delta + 2)}
        merged, _ = drop_isolated(Graph(pair.n, frozenset(moved)))
        g = disjoint_union(merged, *[star_graph(delta)] * (spec.t - 2), *blocks)
    else:
        order = 2 * (_half_up(delta) + 1) + 1
        target = delta + c_edge_count(delta)
        fused = _odd_cycle_with_chords(order, delta, target)
        if not is_factor_critical(fused):
            raise AssertionError("fused block is not factor-critical")
        g = disjoint_union(fused, *blocks[1:])
    return _verify(g, delta, nu_, edge_bound(delta, nu_), f"construct_alternative({delta}, {nu_})")
