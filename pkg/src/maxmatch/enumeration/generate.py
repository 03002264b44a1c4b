"""Isomorph-free generation of small graphs by vertex extension.

Each graph on k+1 vertices is built from a parent on k vertices by adding
vertex k with some neighbor set S.  A child is kept only when vertex k is
in the automorphism orbit of the child's *removal vertex*, an
isomorphism-invariant choice:

* candidates are all vertices, or the non-cut vertices in connected mode;
* among them, minimum degree, then the largest sorted neighbor-degree
  tuple, then the largest canonical position.

So each isomorphism class comes from exactly one parent class; siblings that
are isomorphic (S in the same Aut(parent) orbit) are merged by canonical code.
Caps on degree, edge count and matching number are hereditary under vertex
deletion, which makes pruning the parents sound.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from ..graph import Graph, relabel
from ..matching import nu
from .canon import canonical_labeling

N_MAX_CAP = 16


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class Limits:
    connected: bool = False
    max_degree: int | None = None
    max_edges: int | None = None
    max_matching: int | None = None

    def admits(self, g: Graph) -> bool:
        if self.max_degree is not None and g.max_degree > self.max_degree:
            return False
        if self.max_edges is not None and g.m > self.max_edges:
            return False
        if self.max_matching is not None and nu(g) > self.max_matching:
            return False
        return True


def _connected_mask(adj: tuple[int, ...], alive: int) -> bool:
    if not alive:
        return True
    start = alive & -alive
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt |= adj[low.bit_length() - 1]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen == alive


def _removal_candidates(g: Graph, connected: bool) -> list[int]:
    adj = g.adjacency_masks
    full = (1 << g.n) - 1
    verts = range(g.n)
    if connected and g.n > 2:
        verts = [v for v in verts if _connected_mask(adj, full & ~(1 << v))]
    deg = g.degrees
    low = min(deg[v] for v in verts)
    cands = [v for v in verts if deg[v] == low]
    if len(cands) > 1:
        key = {v: tuple(sorted(deg[w] for w in g.adjacency[v])) for v in cands}
        top = max(key.values())
        cands = [v for v in cands if key[v] == top]
    return cands


def _canonical(g: Graph, order: list[int]) -> Graph:
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    return relabel(g, pos)


def children(parent: Graph, limits: Limits) -> list[Graph]:
    """Accepted one-vertex extensions of ``parent``, canonically labeled."""
    k = parent.n
    deg = parent.degrees
    lo = 1 if (limits.connected and k > 0) else 0
    hi = k
    if not limits.connected and k:
        hi = min(hi, min(deg) + 1)
    if limits.max_degree is not None:
        hi = min(hi, limits.max_degree)
    if limits.max_edges is not None:
        hi = min(hi, limits.max_edges - parent.m)
    out: dict[tuple[int, ...], Graph] = {}
    base_edges = list(parent.edges)
    for s in range(lo, hi + 1):
        for S in combinations(range(k), s):
            if limits.max_degree is not None and any(deg[v] >= limits.max_degree for v in S):
                continue
            child = Graph(k + 1, frozenset(base_edges + [(v, k) for v in S]))
            if not limits.admits(child):
                continue
            cands = _removal_candidates(child, limits.connected)
            if k not in cands:
                continue
            code, order = canonical_labeling(child)
            if code in out:
                continue
            if len(cands) > 1:
                pos = {v: p for p, v in enumerate(order)}
                w = max(cands, key=pos.__getitem__)
                if w != k and canonical_labeling(child, k)[0] != canonical_labeling(child, w)[0]:
                    continue
            out[code] = _canonical(child, order)
    return list(out.values())


def _children_batch(args: tuple[list[Graph], Limits]) -> list[list[Graph]]:
    parents, limits = args
    return [children(p, limits) for p in parents]


def _next_level(level: list[Graph], limits: Limits, jobs: int) -> list[Graph]:
    if jobs <= 1 or len(level) < 2 * jobs:
        return [c for p in level for c in children(p, limits)]
    size = max(1, len(level) // (jobs * 4))
    batches = [(level[i:i + size], limits) for i in range(0, len(level), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_children_batch, batches))
    return [c for batch in results for group in batch for c in group]


def enumerate_graphs(
    n_max: int,
    *,
    n_min: int = 1,
    connected: bool = False,
    max_degree: int | None = None,
    max_edges: int | None = None,
    max_matching: int | None = None,
    predicate: Callable[[Graph], bool] | None = None,
    jobs: int = 1,
) -> Iterator[Graph]:
    """Yield every graph on ``n_min..n_max`` vertices once per isomorphism class.

    The caps prune the generation tree; ``predicate`` is only a final
    filter.  Output order is deterministic (by order, then generation order)
    and does not depend on ``jobs``.
    """
    if n_max > N_MAX_CAP:
        raise EnumerationError(f"n_max={n_max} exceeds the cap of {N_MAX_CAP}")
    if n_min < 1:
        raise EnumerationError("n_min must be at least 1")
    limits = Limits(connected, max_degree, max_edges, max_matching)
    level = [Graph(1, frozenset())]
    for n in range(1, n_max + 1):
        if n > 1:
            level = _next_level(level, limits, jobs)
            if not level:
                return
        if n >= n_min:
            for g in level:
                if predicate is None or predicate(g):
                    yield g
