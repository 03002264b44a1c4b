"""Graphs whose edge set splits into maximum matchings.

A graph is friendly exactly when |E| = chi' * nu, and then every optimal
edge coloring is such a split.  Class II friendly graphs are disjoint unions
of K_{Delta+1}; class I friendly graphs decompose into stars K_{1,Delta} and
factor-critical friendly pieces.  The checks here assert those facts at
runtime and raise TheoremViolation if one ever fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .coloring import (
    ChromaticIndex,
    ChromaticIndexUndecided,
    VizingClass,
    chromatic_index,
    color_class_sizes,
    default_budget,
    iter_colorings,
)
from .graph import Edge, Graph, components, drop_isolated, write_graph6
from .matching import essential_vertices, is_factor_critical, nu


class FriendlyInputError(ValueError):
    """Input outside the domain of the friendliness routines."""


class NotClassIError(FriendlyInputError):
    pass


class TheoremViolation(AssertionError):
    """A runtime check derived from a proved statement failed."""

    def __init__(self, message: str, graph: Graph | None = None):
        if graph is not None:
            message += f" [graph6 {write_graph6(graph).decode()}]"
        super().__init__(message)
        self.graph = graph


def _edges_json(edges) -> list[list[int]]:
    return [list(e) for e in sorted(edges)]


def _require_input(g: Graph) -> None:
    if g.m == 0:
        raise FriendlyInputError("friendliness is not defined for edgeless graphs")
    isolated = g.isolated_vertices()
    if isolated:
        raise FriendlyInputError(f"graph has isolated vertices {isolated}")


@dataclass(frozen=True)
class FriendlyCertificate:
    verdict: bool
    chi: int
    nu: int
    m: int
    vizing_class: VizingClass
    partition: tuple[frozenset[Edge], ...] | None = None

    @property
    def witness(self) -> tuple[int, int, int] | None:
        """``(m, chi, nu)`` with m < chi*nu when the graph is not friendly."""
        return None if self.verdict else (self.m, self.chi, self.nu)

    def to_dict(self) -> dict:
        out: dict = {"friendly": self.verdict}
        if self.verdict:
            assert self.partition is not None
            out["partition"] = sorted(_edges_json(p) for p in self.partition)
        else:
            out["witness"] = {"m": self.m, "chi": self.chi, "nu": self.nu, "chi_nu": self.chi * self.nu}
        return out


def is_friendly(g: Graph, budget: int | None = None, *, index: ChromaticIndex | None = None) -> FriendlyCertificate:
    """Decide friendliness with a certificate.

    On success the partition is the color classes of an optimal coloring,
    each re-checked to be a maximum matching.
    """
    _require_input(g)
    ci = index if index is not None else chromatic_index(g, budget)
    size = nu(g)
    verdict = g.m == ci.chi * size
    partition = None
    if verdict:
        partition = tuple(ci.witness.classes())
        bad = [len(p) for p in partition if len(p) != size]
        if bad:
            raise TheoremViolation(
                f"optimal coloring of a friendly graph has class sizes {color_class_sizes(ci.witness)}, nu={size}",
                g,
            )
    return FriendlyCertificate(verdict, ci.chi, size, g.m, ci.vizing_class, partition)


def could_be_friendly(g: Graph) -> bool:
    """Cheap necessary condition: |E| = chi' * nu needs |E| in {Delta*nu, (Delta+1)*nu}."""
    if g.m == 0:
        return False
    size = nu(g)
    return g.m in (g.max_degree * size, (g.max_degree + 1) * size)


# -- every optimal coloring is balanced -----------------------------------------

@dataclass(frozen=True)
class BalancedReport:
    chi: int
    nu: int
    colorings_checked: int
    exceptions: tuple[tuple[int, ...], ...]
    complete: bool

    @property
    def passed(self) -> bool:
        return self.complete and not self.exceptions and self.colorings_checked > 0


def check_balanced_colorings(g: Graph, budget: int | None = None) -> BalancedReport:
    """Enumerate every chi'-coloring (colors unordered) and record any whose
    class sizes are not all nu.  A budget overrun yields a partial report."""
    cert = is_friendly(g, budget)
    if not cert.verdict:
        raise FriendlyInputError("graph is not friendly")
    budget = budget if budget is not None else default_budget()
    checked = 0
    exceptions = []
    complete = True
    try:
        for col in iter_colorings(g, cert.chi, budget):
            checked += 1
            sizes = tuple(color_class_sizes(col))
            if any(s != cert.nu for s in sizes):
                exceptions.append(sizes)
    except ChromaticIndexUndecided:
        complete = False
    return BalancedReport(cert.chi, cert.nu, checked, tuple(exceptions), complete)


# -- class II -------------------------------------------------------------------

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not_applicable"


@dataclass(frozen=True)
class Class2Report:
    status: str
    delta: int
    nu: int
    reason: str = ""
    components: int = 0
    failing_component: str | None = None

    def to_dict(self) -> dict:
        out = {"status": self.status, "delta": self.delta, "nu": self.nu, "components": self.components}
        if self.reason:
            out["reason"] = self.reason
        if self.failing_component is not None:
            out["failing_component"] = self.failing_component
        return out


def check_class2_structure(g: Graph, cert: FriendlyCertificate | None = None, budget: int | None = None) -> Class2Report:
    """Check that a friendly class II graph (Delta, nu >= 2) has even Delta,
    (Delta/2) | nu and only K_{Delta+1} components, 2*nu/Delta of them."""
    delta = g.max_degree
    size = nu(g)
    if g.m == 0 or g.isolated_vertices():
        return Class2Report(NOT_APPLICABLE, delta, size, "edgeless or has isolated vertices")
    if delta < 2 or size < 2:
        return Class2Report(NOT_APPLICABLE, delta, size, "needs delta >= 2 and nu >= 2")
    cert = cert or is_friendly(g, budget)
    if not cert.verdict:
        return Class2Report(NOT_APPLICABLE, delta, size, "not friendly")
    if cert.vizing_class is not VizingClass.CLASS_II:
        return Class2Report(NOT_APPLICABLE, delta, size, "class I")
    comps = components(g)
    if delta % 2:
        return Class2Report(FAIL, delta, size, "delta is odd", len(comps))
    if size % (delta // 2):
        return Class2Report(FAIL, delta, size, "delta/2 does not divide nu", len(comps))
    complete_edges = (delta + 1) * delta // 2
    for h, _ in comps:
        if h.n != delta + 1 or h.m != complete_edges:
            return Class2Report(
                FAIL, delta, size, "component is not complete", len(comps), write_graph6(h).decode()
            )
    if len(comps) * delta != 2 * size:
        return Class2Report(FAIL, delta, size, "component count is not 2*nu/delta", len(comps))
    return Class2Report(PASS, delta, size, "", len(comps))


# -- class I decomposition ------------------------------------------------------

@dataclass(frozen=True)
class Star:
    center: int
    leaves: tuple[int, ...]

    def edges(self) -> frozenset[Edge]:
        return frozenset((min(self.center, x), max(self.center, x)) for x in self.leaves)

    def to_dict(self) -> dict:
        return {"kind": "star", "center": self.center, "leaves": list(self.leaves)}


@dataclass(frozen=True)
class FactorCriticalPart:
    graph: Graph
    vmap: tuple[int, ...]

    def edges(self) -> frozenset[Edge]:
        return frozenset((self.vmap[u], self.vmap[v]) for u, v in self.graph.edges)

    def to_dict(self) -> dict:
        return {
            "kind": "factor_critical",
            "graph6": write_graph6(self.graph).decode(),
            "vertices": list(self.vmap),
            "edges": _edges_json(self.edges()),
        }


Part = Union[Star, FactorCriticalPart]


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[Part, ...]
    removal_order: tuple[int, ...]
    chi: int

    @property
    def stars(self) -> list[Star]:
        return [p for p in self.parts if isinstance(p, Star)]

    def to_dict(self) -> dict:
        return {
            "chi_prime": self.chi,
            "removal_order": list(self.removal_order),
            "parts": [p.to_dict() for p in self.parts],
        }


def _graph_on(n: int, edges: set[Edge]) -> tuple[Graph, list[int]]:
    return drop_isolated(Graph(n, frozenset(edges)))


def decompose(g: Graph, budget: int | None = None) -> Decomposition:
    """Split a class I friendly graph into stars and factor-critical parts.

    Repeatedly strips the lowest-id vertex covered by every maximum matching
    of the current graph, recording the star of its edges; what is left
    splits into factor-critical components.  Vertex ids in the result are
    those of ``g``.
    """
    cert = is_friendly(g, budget)
    if not cert.verdict:
        raise FriendlyInputError("graph is not friendly; decomposition needs a friendly graph")
    if cert.vizing_class is not VizingClass.CLASS_I:
        raise NotClassIError("class II friendly graph: use check_class2_structure instead")
    chi = cert.chi
    delta = g.max_degree
    remaining = set(g.edges)
    parts: list[Part] = []
    order: list[int] = []
    while remaining:
        h, vmap = _graph_on(g.n, remaining)
        ess = essential_vertices(h)
        if not ess:
            break
        x = vmap[min(ess)]
        leaves = tuple(sorted(vmap[w] for w in h.adjacency[vmap.index(x)]))
        if len(leaves) != chi or len(leaves) != delta:
            raise TheoremViolation(
                f"essential vertex {x} has degree {len(leaves)}, expected chi'={chi}", g
            )
        star = Star(x, leaves)
        parts.append(star)
        order.append(x)
        remaining -= star.edges()
        if remaining:
            rest, _ = _graph_on(g.n, remaining)
            rc = is_friendly(rest, budget)
            if not rc.verdict or rc.chi != chi:
                raise TheoremViolation(
                    f"after removing {x} the remainder is friendly={rc.verdict} with chi'={rc.chi}, expected chi'={chi}",
                    g,
                )
    if remaining:
        h, vmap = _graph_on(g.n, remaining)
        for comp, cmap in components(h):
            fc = is_factor_critical(comp)
            cc = is_friendly(comp, budget)
            if not fc or not cc.verdict or cc.chi != chi:
                raise TheoremViolation(
                    f"leftover component is factor_critical={fc.verdict}, friendly={cc.verdict}, chi'={cc.chi} (expected {chi})",
                    g,
                )
            parts.append(FactorCriticalPart(comp, tuple(vmap[i] for i in cmap)))
    covered: list[Edge] = [e for p in parts for e in p.edges()]
    if len(covered) != g.m or set(covered) != set(g.edges):
        raise TheoremViolation("decomposition parts do not partition the edge set", g)
    return Decomposition(tuple(parts), tuple(order), chi)
