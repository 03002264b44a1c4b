"""Exhaustive theorem-checking suites over enumerated small graphs.

Every suite returns a VerificationReport whose JSON form depends only on the
parameters: per-graph checks run in input order (optionally in worker
processes) and results are merged in that same order.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Any, Callable, Sequence

from ..coloring import VizingClass
from ..extremal import (
    ExtremalSpec,
    construct_alternative,
    construct_attaining,
    edge_bound,
    edge_bound_relaxed,
)
from ..friendly import (
    PASS,
    TheoremViolation,
    check_class2_structure,
    could_be_friendly,
    decompose,
    is_friendly,
)
from ..graph import Graph, components, disjoint_union, write_graph6
from ..matching import nu
from .canon import are_isomorphic, canonical_form
from .generate import N_MAX_CAP, enumerate_graphs
from .oracles import brute_friendly

SUITES = ("bound", "uniqueness", "friendly", "class2", "decomposition")

# exhaustive uniqueness counting is only attempted inside this box
UNIQUENESS_MAX_DELTA = 4
UNIQUENESS_MAX_NU = 3


class VerificationError(ValueError):
    pass


@dataclass
class VerificationReport:
    suite: str
    parameters: dict[str, Any]
    examined: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    partial: bool = False
    details: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out = {
            "suite": self.suite,
            "parameters": self.parameters,
            "examined": self.examined,
            "passed": self.passed,
            "partial": self.partial,
            "violations": sorted(self.violations, key=lambda v: (v.get("graph6", ""), v.get("detail", ""))),
            "details": self.details,
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


def _g6(g: Graph) -> str:
    return write_graph6(g).decode()


def _run(fn: Callable[[Graph], Any], graphs: Sequence[Graph], jobs: int) -> list[Any]:
    if jobs <= 1 or len(graphs) < 2 * jobs:
        return [fn(g) for g in graphs]
    chunk = max(1, len(graphs) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, graphs, chunksize=chunk))


def _no_isolated(g: Graph) -> bool:
    return g.n >= 2 and 0 not in g.degrees


# -- edge bound -------------------------------------------------------------------

def _bound_check(args: tuple[Graph, int]) -> tuple[str | None, bool]:
    g, tighten = args
    delta, size = g.max_degree, nu(g)
    bound = edge_bound(delta, size)
    problems = []
    if g.m > bound - tighten:
        problems.append(f"m={g.m} exceeds bound {bound - tighten} (delta={delta}, nu={size})")
    if bound > edge_bound_relaxed(delta, size):
        problems.append("sharp bound above relaxed bound")
    return ("; ".join(problems) or None), g.m == bound


def verify_edge_bound(n_max: int, *, tighten: int = 0, jobs: int = 1) -> VerificationReport:
    """|E| <= edge_bound(Delta, nu) on every graph without isolated vertices.

    ``tighten`` lowers the bound artificially; any positive value must
    produce violations, which is how the harness checks itself.
    """
    start = time.perf_counter()
    report = VerificationReport("bound", {"max_vertices": n_max, "tighten": tighten})
    graphs = list(enumerate_graphs(n_max, predicate=_no_isolated, jobs=jobs))
    results = _run(_bound_check, [(g, tighten) for g in graphs], jobs)
    attaining = 0
    for g, (problem, hit) in zip(graphs, results):
        attaining += hit
        if problem:
            report.violations.append({"graph6": _g6(g), "detail": problem})
    report.examined = len(graphs)
    report.details = {"attaining": attaining}
    report.elapsed = time.perf_counter() - start
    return report


# -- uniqueness of attaining graphs ---------------------------------------------

def _component_types(delta: int, size: int, jobs: int) -> dict[tuple[int, int, int], list[Graph]]:
    """Connected graphs with an edge, max degree <= delta and nu <= size,
    grouped by (nu, m, max degree).

    Every component of an attaining graph is connected with at most
    edge_bound(delta, size) edges, hence at most that many plus one vertices.
    """
    n_cap = edge_bound(delta, size) + 1
    if n_cap > N_MAX_CAP:
        raise VerificationError(f"component vertex cap {n_cap} exceeds the enumeration cap")
    groups: dict[tuple[int, int, int], list[Graph]] = {}
    for g in enumerate_graphs(n_cap, n_min=2, connected=True, max_degree=delta, max_matching=size, jobs=jobs):
        groups.setdefault((nu(g), g.m, g.max_degree), []).append(g)
    return groups


def _type_multisets(types: list[tuple[int, int, int]], size: int, edges: int, delta: int):
    """Multisets of component types with matching numbers summing to ``size``,
    edge counts summing to ``edges`` and overall max degree ``delta``."""
    out = []

    def rec(start: int, left_nu: int, left_m: int, chosen: list) -> None:
        if left_nu == 0:
            if left_m == 0 and max(t[2] for t in chosen) == delta:
                out.append(list(chosen))
            return
        for i in range(start, len(types)):
            t = types[i]
            if t[0] <= left_nu and t[1] <= left_m:
                chosen.append(t)
                rec(i, left_nu - t[0], left_m - t[1], chosen)
                chosen.pop()

    rec(0, size, edges, [])
    return out


def _multisets(items: list[Graph], r: int):
    if r == 0:
        yield []
        return
    for i, g in enumerate(items):
        for rest in _multisets(items[i:], r - 1):
            yield [g] + rest


def _signature(g: Graph) -> tuple[bytes, ...]:
    return tuple(sorted(canonical_form(h) for h, _ in components(g) if h.m))


def verify_uniqueness(delta: int, size: int, *, jobs: int = 1, list_limit: int = 64) -> VerificationReport:
    """Count isomorphism classes of graphs with max degree ``delta``, matching
    number ``size`` and edge_bound(delta, size) edges.

    Expect exactly one class when ceil(delta/2) divides nu and at least two
    otherwise; both constructions must appear among the classes.  Outside
    the exhaustive box only the constructions are checked (partial report).
    """
    start = time.perf_counter()
    if delta < 2 or size < 2:
        raise VerificationError("uniqueness suite needs delta >= 2 and nu >= 2")
    spec = ExtremalSpec(delta, size)
    bound = spec.bound
    report = VerificationReport("uniqueness", {"delta": delta, "nu": size})
    witness = construct_attaining(delta, size)
    witnesses = {"attaining": witness}
    if not spec.divisible:
        witnesses["alternative"] = construct_alternative(delta, size)
        if are_isomorphic(witness, witnesses["alternative"]):
            report.violations.append({"graph6": _g6(witness), "detail": "constructions are isomorphic"})
    details: dict[str, Any] = {
        "bound": bound,
        "divisible": spec.divisible,
        "witnesses": {k: _g6(v) for k, v in witnesses.items()},
    }
    exhaustive = delta <= UNIQUENESS_MAX_DELTA and size <= UNIQUENESS_MAX_NU
    if not exhaustive:
        report.partial = True
        report.examined = len(witnesses)
        details["mode"] = "constructive"
        details["classes_at_least"] = len(witnesses) if not report.violations else 1
        report.details = details
        report.elapsed = time.perf_counter() - start
        return report

    groups = _component_types(delta, size, jobs)
    types = sorted(groups)
    classes: list[list[Graph]] = []
    count = 0
    for combo in _type_multisets(types, size, bound, delta):
        reps = Counter(combo)
        n_here = 1
        for t, r in reps.items():
            n_here *= comb(len(groups[t]) + r - 1, r)
        count += n_here
        if len(classes) < list_limit:
            pools = [list(_multisets(groups[t], r)) for t, r in sorted(reps.items())]
            stack: list[list[Graph]] = [[]]
            for pool in pools:
                stack = [s + p for s in stack for p in pool]
            classes.extend(stack[: list_limit - len(classes)])
    report.examined = sum(len(v) for v in groups.values())
    class_graphs = [disjoint_union(*parts) for parts in classes]
    details["mode"] = "exhaustive"
    details["components_examined"] = report.examined
    details["classes"] = count
    details["class_graph6"] = sorted(_g6(g) for g in class_graphs)
    sigs = {_signature(g) for g in class_graphs}
    for name, w in witnesses.items():
        stats = (w.max_degree, nu(w), w.m)
        if stats != (delta, size, bound):
            report.violations.append({"graph6": _g6(w), "detail": f"{name} witness has (delta, nu, m)={stats}"})
        if count <= list_limit and _signature(w) not in sigs:
            report.violations.append({"graph6": _g6(w), "detail": f"{name} witness missing from enumeration"})
    if spec.divisible and count != 1:
        report.violations.append({"graph6": "", "detail": f"divisible case has {count} classes, expected 1"})
    if not spec.divisible and count < 2:
        report.violations.append({"graph6": "", "detail": f"non-divisible case has {count} classes, expected >= 2"})
    report.details = details
    report.elapsed = time.perf_counter() - start
    return report


# -- friendliness criterion --------------------------------------------------------

def graphs_by_edges(max_edges: int, n_max: int | None = None, *, jobs: int = 1) -> list[Graph]:
    """All graphs without isolated vertices and with 1..max_edges edges, one
    per isomorphism class, assembled as multisets of connected pieces."""
    cap = max_edges + 1 if n_max is None else min(n_max, max_edges + 1)
    if cap > N_MAX_CAP:
        raise VerificationError(f"vertex cap {cap} exceeds the enumeration cap")
    pieces = list(enumerate_graphs(cap, n_min=2, connected=True, max_edges=max_edges, jobs=jobs))
    pieces.sort(key=lambda g: (g.m, g.n, write_graph6(g)))
    out: list[Graph] = []

    def rec(start: int, chosen: list[Graph], m: int, n: int) -> None:
        if chosen:
            out.append(disjoint_union(*chosen))
        for i in range(start, len(pieces)):
            p = pieces[i]
            if m + p.m > max_edges:
                break
            if n_max is not None and n + p.n > n_max:
                continue
            chosen.append(p)
            rec(i, chosen, m + p.m, n + p.n)
            chosen.pop()

    rec(0, [], 0, 0)
    return out


def _friendly_check(g: Graph) -> tuple[str | None, bool]:
    brute = brute_friendly(g)
    fast = is_friendly(g).verdict
    if brute != fast:
        return f"brute force says {brute}, |E| = chi'*nu says {fast}", fast
    return None, fast


def verify_friendly_criterion(max_edges: int = 8, n_max: int | None = None, *, jobs: int = 1) -> VerificationReport:
    """Brute-force partition search versus the |E| = chi' * nu test."""
    start = time.perf_counter()
    report = VerificationReport("friendly", {"max_edges": max_edges, "max_vertices": n_max})
    graphs = graphs_by_edges(max_edges, n_max, jobs=jobs)
    results = _run(_friendly_check, graphs, jobs)
    friendly = 0
    for g, (problem, verdict) in zip(graphs, results):
        friendly += verdict
        if problem:
            report.violations.append({"graph6": _g6(g), "detail": problem})
    report.examined = len(graphs)
    report.details = {"friendly": friendly}
    report.elapsed = time.perf_counter() - start
    return report


# -- class II characterization ---------------------------------------------------

def _class2_check(g: Graph) -> tuple[str | None, bool]:
    if g.max_degree < 2 or not could_be_friendly(g):
        return None, False
    cert = is_friendly(g)
    if not cert.verdict or cert.vizing_class is not VizingClass.CLASS_II or cert.nu < 2:
        return None, False
    rep = check_class2_structure(g, cert)
    if rep.status != PASS:
        return f"{rep.status}: {rep.reason}", True
    return None, True


def verify_class2_theorem(n_max: int = 8, *, jobs: int = 1) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport("class2", {"max_vertices": n_max})
    graphs = list(enumerate_graphs(n_max, predicate=_no_isolated, jobs=jobs))
    results = _run(_class2_check, graphs, jobs)
    hits = []
    for g, (problem, hit) in zip(graphs, results):
        if hit:
            hits.append(_g6(g))
        if problem:
            report.violations.append({"graph6": _g6(g), "detail": problem})
    report.examined = len(graphs)
    report.details = {"hits": sorted(hits)}
    report.elapsed = time.perf_counter() - start
    return report


# -- class I decomposition -------------------------------------------------------

def _decomposition_check(g: Graph) -> tuple[str | None, tuple[int, int] | None]:
    if not could_be_friendly(g):
        return None, None
    cert = is_friendly(g)
    if not cert.verdict or cert.vizing_class is not VizingClass.CLASS_I:
        return None, None
    try:
        dec = decompose(g)
    except TheoremViolation as exc:
        return str(exc), None
    stars = len(dec.stars)
    return None, (stars, len(dec.parts) - stars)


def verify_decomposition_theorem(n_max: int = 7, *, jobs: int = 1) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport("decomposition", {"max_vertices": n_max})
    graphs = list(enumerate_graphs(n_max, predicate=_no_isolated, jobs=jobs))
    results = _run(_decomposition_check, graphs, jobs)
    decomposed = stars = fc_parts = 0
    for g, (problem, shape) in zip(graphs, results):
        if problem:
            report.violations.append({"graph6": _g6(g), "detail": problem})
        if shape:
            decomposed += 1
            stars += shape[0]
            fc_parts += shape[1]
    report.examined = len(graphs)
    report.details = {"decomposed": decomposed, "stars": stars, "factor_critical_parts": fc_parts}
    report.elapsed = time.perf_counter() - start
    return report


def run_suite(name: str, **params: Any) -> VerificationReport:
    if name == "bound":
        return verify_edge_bound(params.get("max_vertices") or 8, tighten=params.get("tighten", 0), jobs=params.get("jobs", 1))
    if name == "uniqueness":
        if params.get("delta") is None or params.get("nu") is None:
            raise VerificationError("uniqueness suite needs --delta and --nu")
        return verify_uniqueness(params["delta"], params["nu"], jobs=params.get("jobs", 1))
    if name == "friendly":
        return verify_friendly_criterion(params.get("max_edges") or 8, params.get("max_vertices"), jobs=params.get("jobs", 1))
    if name == "class2":
        return verify_class2_theorem(params.get("max_vertices") or 8, jobs=params.get("jobs", 1))
    if name == "decomposition":
        return verify_decomposition_theorem(params.get("max_vertices") or 7, jobs=params.get("jobs", 1))
    raise VerificationError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
