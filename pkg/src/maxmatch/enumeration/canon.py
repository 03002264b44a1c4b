"""Canonical labeling by equitable refinement and individualization.

The search tree is the usual one: refine the ordered partition, pick the
first non-singleton cell, individualize each of its vertices in turn.  The
canonical leaf is the one whose relabeled adjacency rows compare largest.
Subtrees are skipped when a known automorphism fixing the current
individualized prefix maps the candidate onto an explored sibling.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, relabel, write_graph6


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                groups.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                out.extend(groups[key] for key in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _twin_transpositions(adj: tuple[int, ...], n: int) -> list[list[int]]:
    gens = []
    for u in range(n):
        for v in range(u + 1, n):
            bu, bv = 1 << u, 1 << v
            if adj[u] & ~bv == adj[v] & ~bu:
                perm = list(range(n))
                perm[u], perm[v] = v, u
                gens.append(perm)
    return gens


@dataclass
class _Search:
    adj: tuple[int, ...]
    n: int
    autos: list[list[int]]
    best_code: tuple[int, ...] | None = None
    best_order: list[int] | None = None
    first_code: tuple[int, ...] | None = None
    first_order: list[int] | None = None

    def leaf(self, cells: list[list[int]]) -> None:
        order = [c[0] for c in cells]
        pos = [0] * self.n
        for p, v in enumerate(order):
            pos[v] = p
        rows = []
        for v in order:
            a = self.adj[v]
            row = 0
            while a:
                low = a & -a
                row |= 1 << (self.n - 1 - pos[low.bit_length() - 1])
                a ^= low
            rows.append(row)
        code = tuple(rows)
        if self.first_code is None:
            self.first_code, self.first_order = code, order
        elif code == self.first_code:
            self._record(order, self.first_order)
        if self.best_code is None or code > self.best_code:
            self.best_code, self.best_order = code, order
        elif code == self.best_code:
            self._record(order, self.best_order)

    def _record(self, order: list[int], other: list[int]) -> None:
        perm = [0] * self.n
        for v, w in zip(order, other):
            perm[v] = w
        self.autos.append(perm)

    def _orbit_root(self, fixed: list[int]):
        gens = [a for a in self.autos if all(a[x] == x for x in fixed)]
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in gens:
            for x, y in enumerate(a):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        return find

    def run(self, cells: list[list[int]], fixed: list[int]) -> None:
        cells = _refine(self.adj, cells)
        t = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if t is None:
            self.leaf(cells)
            return
        target = cells[t]
        done: list[int] = []
        for v in target:
            if done:
                find = self._orbit_root(fixed)
                if find(v) in {find(u) for u in done}:
                    continue
            done.append(v)
            rest = [u for u in target if u != v]
            self.run(cells[:t] + [[v], rest] + cells[t + 1:], fixed + [v])


def _initial_cells(g: Graph) -> list[list[int]]:
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(g.degrees[v], []).append(v)
    return [by_deg[d] for d in sorted(by_deg)]


def canonical_labeling(g: Graph, individualize: int | None = None) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(code, order)``: ``order[p]`` is the vertex put at position p.

    With ``individualize=x`` the search starts with ``x`` split off into
    its own cell; two vertices lie in one automorphism orbit exactly when
    their individualized codes agree.
    """
    if g.n == 0:
        return (), []
    adj = g.adjacency_masks
    cells = _initial_cells(g)
    fixed: list[int] = []
    if individualize is not None:
        cells = [[individualize], *[[u for u in c if u != individualize] for c in cells]]
        cells = [c for c in cells if c]
        fixed = [individualize]
    search = _Search(adj, g.n, _twin_transpositions(adj, g.n))
    search.run(cells, fixed)
    assert search.best_code is not None and search.best_order is not None
    return search.best_code, search.best_order


def canonical_relabel(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    return relabel(g, pos)


def canonical_form(g: Graph) -> bytes:
    """Bytes that are equal for two graphs exactly when they are isomorphic."""
    return write_graph6(canonical_relabel(g))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees) != sorted(g2.degrees):
        return False
    return canonical_form(g1) == canonical_form(g2)


def same_orbit(g: Graph, u: int, v: int) -> bool:
    """Whether some automorphism of ``g`` maps ``u`` to ``v``."""
    if u == v:
        return True
    return canonical_labeling(g, u)[0] == canonical_labeling(g, v)[0]
