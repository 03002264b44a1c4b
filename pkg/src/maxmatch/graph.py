"""Immutable simple graphs, basic queries and text serialization.

Vertices are the integers ``0..n-1``.  Edges are stored as sorted pairs
``(u, v)`` with ``u < v``.  Operations that drop vertices return the new
graph together with a vertex map ``vmap`` where ``vmap[i]`` is the id that
vertex ``i`` of the new graph had in the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_N = 62


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""


class GraphFormatError(ValueError):
    """Malformed serialized graph.

    ``offset`` is a byte offset (graph6) and ``line`` a 1-based line number
    (edge list); whichever does not apply is None.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = ""
        if offset is not None:
            where = f" (byte offset {offset})"
        elif line is not None:
            where = f" (line {line})"
        super().__init__(message + where)
        self.offset = offset
        self.line = line


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"bad edge {(u, v)} for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, normalizing edge orientation.

        Loops are rejected; repeated edges collapse into one.
        """
        norm = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            norm.add(_norm(u, v))
        return cls(n, frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def isolated_vertices(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees) if d == 0]

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.sorted_edges)})"


@dataclass(frozen=True)
class GraphStats:
    delta: int
    nu: int
    m: int
    isolated: tuple[int, ...]


def degree(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return g.degrees[v]


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``keep``; vertices are relabeled in ascending order."""
    vmap = sorted(set(keep))
    for v in vmap:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(vmap)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(vmap), edges), vmap


def delete_vertex(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """``G - v``.  Remaining vertices keep their relative order."""
    g._check_vertex(v)
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def drop_isolated(g: Graph) -> tuple[Graph, list[int]]:
    return induced_subgraph(g, (v for v in range(g.n) if g.degrees[v] > 0))


def components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Connected components ordered by their smallest vertex id."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        out.append(induced_subgraph(g, comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, frozenset(edges))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Image of ``g`` under ``v -> perm[v]``."""
    return Graph(g.n, frozenset(_norm(perm[u], perm[v]) for u, v in g.edges))


# -- small named graphs ------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for v in range(n) for u in range(v)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- graph6 ------------------------------------------------------------------

def write_graph6(g: Graph) -> bytes:
    """graph6 encoding without header or trailing newline."""
    if g.n > GRAPH6_MAX_N:
        raise GraphFormatError(f"graph6 small form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = bytearray([g.n + 63])
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((i, j) in g.edges)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("latin-1")
    base = 0
    if text.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
    data = text[base:].rstrip(b"\r\n")
    if not data:
        raise GraphFormatError("empty graph6 string", offset=base)
    for k, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte} outside 63..126", offset=base + k)
    n = data[0] - 63
    if n == 63:
        raise GraphFormatError(f"size field exceeds n={GRAPH6_MAX_N}", offset=base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) < need:
        raise GraphFormatError(
            f"truncated payload: {len(payload)} of {need} bytes", offset=base + len(data)
        )
    if len(payload) > need:
        raise GraphFormatError("trailing bytes after payload", offset=base + 1 + need)
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            chunk = payload[bit // 6] - 63
            if (chunk >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    if need and (payload[-1] - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise GraphFormatError("nonzero padding bits", offset=base + need)
    return Graph(n, frozenset(edges))


# -- edge list ---------------------------------------------------------------

def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with an optional leading ``n <count>`` line.

    Blank lines and ``#`` comments are ignored.  Without a count line the
    vertex count is one more than the largest id.
    """
    declared = None
    edges: set[Edge] = set()
    seen_edge = False
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_edge or declared is not None:
                raise GraphFormatError("'n' line must come first", line=lineno)
            if len(parts) != 2:
                raise GraphFormatError("expected 'n <count>'", line=lineno)
            try:
                declared = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[1]!r}", line=lineno) from None
            if declared < 0:
                raise GraphFormatError("negative vertex count", line=lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex id in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex id", line=lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", line=lineno)
        if declared is not None and max(u, v) >= declared:
            raise GraphFormatError(f"vertex id {max(u, v)} >= declared n={declared}", line=lineno)
        e = _norm(u, v)
        if e in edges:
            raise GraphFormatError(f"duplicate edge {e}", line=lineno)
        edges.add(e)
        seen_edge = True
        top = max(top, v, u)
    n = declared if declared is not None else top + 1
    return Graph(n, frozenset(edges))
