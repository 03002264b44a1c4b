"""Maximum cardinality matching in general graphs (Edmonds' blossom search),
essential vertices and factor-criticality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Edge, Graph, GraphStats, delete_vertex, is_connected


@dataclass(frozen=True)
class Matching:
    host: Graph = field(repr=False)
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        covered: set[int] = set()
        for u, v in self.edges:
            if (u, v) not in self.host.edges:
                raise ValueError(f"{(u, v)} is not an edge of the host graph")
            if u in covered or v in covered:
                raise ValueError(f"edges of a matching share vertex at {(u, v)}")
            covered.update((u, v))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


def _find_augmenting(adj, mate: list[int], root: int, banned: int = -1) -> tuple[int, list[int]]:
    """Grow an alternating tree from the exposed vertex ``root``.

    Returns the exposed endpoint of an augmenting path (-1 if none) and the
    tree's parent links.  ``banned`` is treated as deleted.
    """
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[mate[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if to == banned or base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                # odd cycle: contract the blossom onto its base
                cur = lca(v, to)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def _augment(mate: list[int], parent: list[int], end: int) -> None:
    v = end
    while v != -1:
        pv = parent[v]
        ppv = mate[pv]
        mate[v] = pv
        mate[pv] = v
        v = ppv


def _mates(g: Graph) -> list[int]:
    adj = g.adjacency
    mate = [-1] * g.n
    # greedy start, ascending ids
    for u, v in g.sorted_edges:
        if mate[u] == -1 and mate[v] == -1:
            mate[u], mate[v] = v, u
    for root in range(g.n):
        if mate[root] == -1:
            end, parent = _find_augmenting(adj, mate, root)
            if end != -1:
                _augment(mate, parent, end)
    return mate


def _edges_of(mate: list[int]) -> frozenset[Edge]:
    return frozenset((u, v) for u, v in enumerate(mate) if u < v)


def max_matching(g: Graph) -> Matching:
    """A maximum matching of ``g``; the same input always gives the same matching."""
    return Matching(g, _edges_of(_mates(g)))


def nu(g: Graph) -> int:
    return sum(1 for u, v in enumerate(_mates(g)) if u < v)


def stats(g: Graph) -> GraphStats:
    return GraphStats(
        delta=g.max_degree, nu=nu(g), m=g.m, isolated=tuple(g.isolated_vertices())
    )


def _matching_without(g: Graph, mate: list[int], x: int) -> list[int] | None:
    """Maximum matching of ``g - x`` (ids unchanged, ``x`` unmatched) if it keeps
    the size of ``mate``, else None.

    Only the former partner of ``x`` can start an augmenting path, so one
    search decides.
    """
    y = mate[x]
    if y == -1:
        return list(mate)
    work = list(mate)
    work[x] = work[y] = -1
    end, parent = _find_augmenting(g.adjacency, work, y, banned=x)
    if end == -1:
        return None
    _augment(work, parent, end)
    return work


def nu_without(g: Graph, x: int) -> int:
    """nu(G - x), computed by repairing a maximum matching of ``g``."""
    g._check_vertex(x)
    mate = _mates(g)
    size = sum(1 for u, v in enumerate(mate) if u < v)
    return size if _matching_without(g, mate, x) is not None else size - 1


def essential_vertices(g: Graph) -> frozenset[int]:
    """Vertices covered by every maximum matching, i.e. nu(G - x) = nu(G) - 1."""
    mate = _mates(g)
    return frozenset(x for x in range(g.n) if _matching_without(g, mate, x) is None)


@dataclass(frozen=True)
class FactorCriticality:
    """Result of a factor-criticality test.

    On success ``certificates[x]`` is a perfect matching of ``G - x`` given in
    the vertex ids of ``G``.
    """

    verdict: bool
    reason: str = ""
    certificates: dict[int, frozenset[Edge]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict


def is_factor_critical(g: Graph) -> FactorCriticality:
    if g.n % 2 == 0:
        return FactorCriticality(False, "even order")
    if not is_connected(g):
        return FactorCriticality(False, "disconnected")
    mate = _mates(g)
    certs = {}
    for x in range(g.n):
        work = _matching_without(g, mate, x)
        if work is None or any(work[v] == -1 for v in range(g.n) if v != x):
            return FactorCriticality(False, f"G - {x} has no perfect matching")
        certs[x] = _edges_of(work)
    # certificates are re-checked as perfect matchings of the induced subgraph
    for x, cert in certs.items():
        h, vmap = delete_vertex(g, x)
        back = {old: i for i, old in enumerate(vmap)}
        Matching(h, frozenset((back[u], back[v]) for u, v in cert))
    return FactorCriticality(True, "", certs)
