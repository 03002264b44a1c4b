from functools import lru_cache

from hypothesis import strategies as st

from maxmatch.enumeration.generate import enumerate_graphs
from maxmatch.graph import Graph


@lru_cache(maxsize=None)
def all_graphs(n_max: int, no_isolated: bool = False) -> tuple[Graph, ...]:
    pred = (lambda g: not g.isolated_vertices()) if no_isolated else None
    return tuple(enumerate_graphs(n_max, predicate=pred))


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 1) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))
