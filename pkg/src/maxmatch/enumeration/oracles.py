"""Brute-force reference implementations.

Nothing here shares code with the fast paths it checks: no blossoms, no
refinement, no symmetry breaking.  Only usable on small graphs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, gcd

from ..graph import Graph


def _edge_list(g: Graph) -> list[tuple[int, int]]:
    return sorted(g.edges)


def brute_nu(g: Graph) -> int:
    """Largest matching by include/exclude recursion over the edge list."""
    edges = _edge_list(g)

    def rec(i: int, covered: int) -> int:
        if i == len(edges):
            return 0
        best = rec(i + 1, covered)
        u, v = edges[i]
        if not covered >> u & 1 and not covered >> v & 1:
            best = max(best, 1 + rec(i + 1, covered | 1 << u | 1 << v))
        return best

    return rec(0, 0)


def all_matchings(g: Graph, size: int) -> list[frozenset[tuple[int, int]]]:
    out = []
    for combo in combinations(_edge_list(g), size):
        verts = [x for e in combo for x in e]
        if len(set(verts)) == len(verts):
            out.append(frozenset(combo))
    return out


def brute_chromatic_index(g: Graph) -> int:
    """Smallest k admitting a proper k-edge-coloring, trying k = Delta, Delta+1, ...

    Plain backtracking over the sorted edge list; the only pruning is that a
    fresh color is always the lowest one not yet used anywhere.
    """
    edges = _edge_list(g)
    if not edges:
        return 0
    seen: list[set[int]] = [set() for _ in range(g.n)]
    k = max(len(nbrs) for nbrs in g.adjacency)

    def rec(i: int, opened: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        for c in range(min(opened + 1, k)):
            if c in seen[u] or c in seen[v]:
                continue
            seen[u].add(c)
            seen[v].add(c)
            if rec(i + 1, max(opened, c + 1)):
                return True
            seen[u].discard(c)
            seen[v].discard(c)
        return False

    while not rec(0, 0):
        k += 1
    return k


def brute_friendly(g: Graph) -> bool:
    """Whether E(g) splits into maximum matchings, by exact cover search."""
    edges = _edge_list(g)
    if not edges:
        return False
    maximum = all_matchings(g, brute_nu(g))
    by_edge: dict[tuple[int, int], list[frozenset]] = {e: [] for e in edges}
    for mm in maximum:
        for e in mm:
            by_edge[e].append(mm)

    def cover(left: frozenset) -> bool:
        if not left:
            return True
        first = min(left)
        return any(mm <= left and cover(left - mm) for mm in by_edge[first])

    return cover(frozenset(edges))


def brute_canonical(g: Graph) -> tuple[int, ...]:
    """Lexicographically smallest sorted edge tuple over all n! relabelings."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return (g.n,) + tuple(x for e in best or () for x in e)


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    target = g2.edges
    for perm in permutations(range(g1.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g1.edges):
            return True
    return False


def brute_graph_classes(n: int) -> int:
    """Orbits of all 2^(n choose 2) labeled graphs under S_n, listed explicitly."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = [
        [index[tuple(sorted((p[u], p[v])))] for u, v in pairs]
        for p in permutations(range(n))
    ]
    seen = bytearray(1 << len(pairs))
    classes = 0
    for code in range(1 << len(pairs)):
        if seen[code]:
            continue
        classes += 1
        bits = [i for i in range(len(pairs)) if code >> i & 1]
        for img in perms:
            image = 0
            for i in bits:
                image |= 1 << img[i]
            seen[image] = 1
    return classes


def _partitions(n: int, largest: int | None = None):
    if n == 0:
        yield []
        return
    for part in range(min(n, largest or n), 0, -1):
        for rest in _partitions(n - part, part):
            yield [part] + rest


def burnside_graph_count(n: int) -> int:
    """Number of graphs on n unlabeled vertices by counting fixed points of
    each permutation cycle type acting on vertex pairs."""
    total = Fraction(0)
    for cycle_type in _partitions(n):
        mult: dict[int, int] = {}
        for c in cycle_type:
            mult[c] = mult.get(c, 0) + 1
        size = factorial(n)
        for c, k in mult.items():
            size //= c ** k * factorial(k)
        pair_cycles = 0
        for c in cycle_type:
            pair_cycles += c // 2  # pairs within one cycle
        for i, a in enumerate(cycle_type):
            for b in cycle_type[i + 1:]:
                pair_cycles += gcd(a, b)
        total += size * Fraction(2 ** pair_cycles)
    total /= factorial(n)
    assert total.denominator == 1
    return int(total)


def connected_counts(totals: list[int]) -> list[int]:
    """Invert the Euler transform: connected graph counts from all-graph counts.

    ``totals[i]`` is the number of graphs on i vertices (``totals[0] == 1``).
    """
    n_max = len(totals) - 1
    conn = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        # n * a_n = sum_k b_k * a_{n-k},  b_k = sum_{d | k} d * c_d
        b = [0] * (n + 1)
        for k in range(1, n):
            b[k] = sum(d * conn[d] for d in range(1, k + 1) if k % d == 0)
        rest = sum(b[k] * totals[n - k] for k in range(1, n))
        b_n = n * totals[n] - rest
        conn[n] = (b_n - sum(d * conn[d] for d in range(1, n) if n % d == 0)) // n
    return conn
