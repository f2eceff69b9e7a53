"""Stabilization of marked weighted metric graphs.

A vertex set is stable when no weight-0 vertex has valence below three
(valence counts rays once and loop edges twice).  For negative Euler
characteristic, repeatedly removing weight-0 vertices of valence one and
merging through weight-0 vertices of valence two reaches the unique stable
graph; the removal order does not matter up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .metric_graph import MetricGraph, euler_char, total_genus

CHI_ZERO_DIAGNOSTIC = (
    "Euler characteristic is zero: minimal vertex sets are non-unique "
    "(genus 0 with two markings, or genus 1 with no markings); "
    "stabilization is not defined"
)


def _valence1_candidates(g: MetricGraph):
    """Weight-0 vertices whose single incidence is one non-loop edge.

    A vertex whose only incidence is a ray is excluded: its unique
    neighbor is a marking.
    """
    out = []
    for v, w in g.vertices:
        if w != 0 or g.valence(v) != 1:
            continue
        if any(b == v for b, _ in g.rays):
            continue
        out.append(v)
    return out


def _valence2_candidates(g: MetricGraph):
    """Weight-0 vertices with exactly two distinct non-loop incident
    segments (edges or rays), not both of them rays."""
    out = []
    for v, w in g.vertices:
        if w != 0 or g.valence(v) != 2:
            continue
        if any(u == v == x for u, x, _ in g.edges):
            continue  # the two directions come from a loop
        n_rays = sum(1 for b, _ in g.rays if b == v)
        if n_rays == 2:
            continue  # both far endpoints are markings
        out.append(v)
    return out


def _apply_valence1(g: MetricGraph, v: str) -> MetricGraph:
    edges = [e for e in g.edges if v not in e[:2]]
    vertices = tuple(x for x in g.vertices if x[0] != v)
    return MetricGraph.make(vertices, edges, g.rays)


def _apply_valence2(g: MetricGraph, v: str) -> MetricGraph:
    inc = [i for i, (a, b, _) in enumerate(g.edges) if v in (a, b)]
    vertices = tuple(x for x in g.vertices if x[0] != v)
    edges = [e for i, e in enumerate(g.edges) if i not in inc]
    rays = list(g.rays)
    if len(inc) == 2:
        # merge two edges through v into one of summed length
        (a1, b1, l1) = g.edges[inc[0]]
        (a2, b2, l2) = g.edges[inc[1]]
        y1 = b1 if a1 == v else a1
        y2 = b2 if a2 == v else a2
        edges.append((y1, y2, l1 + l2))
    else:
        # one edge and one ray: the ray absorbs the edge
        (a, b, _) = g.edges[inc[0]]
        y = b if a == v else a
        k = next(i for i, (base, _) in enumerate(rays) if base == v)
        rays[k] = (y, rays[k][1])
    return MetricGraph.make(vertices, edges, rays)


def prune_candidates(g: MetricGraph):
    """All applicable single prune moves, as (rule, vertex) pairs."""
    return [("valence1", v) for v in _valence1_candidates(g)] + [
        ("valence2", v) for v in _valence2_candidates(g)
    ]


def apply_prune(g: MetricGraph, rule: str, v: str) -> MetricGraph:
    if rule == "valence1":
        return _apply_valence1(g, v)
    if rule == "valence2":
        return _apply_valence2(g, v)
    raise ValueError(f"unknown rule {rule}")


def prune_step(g: MetricGraph):
    """One deterministic prune: valence-1 rule first, lowest vertex id
    first.  Returns (graph, rule, vertex) or None at a fixed point."""
    for rule, pick in (
        ("valence1", _valence1_candidates(g)),
        ("valence2", _valence2_candidates(g)),
    ):
        if pick:
            v = min(pick)
            return apply_prune(g, rule, v), rule, v
    return None


def is_stable(g: MetricGraph) -> bool:
    return all(w > 0 or g.valence(v) >= 3 for v, w in g.vertices)


@dataclass(frozen=True)
class StabilizationReport:
    input: MetricGraph
    output: MetricGraph
    steps: tuple[tuple[str, str], ...]  # (rule, removed vertex id)
    chi: int


def stabilize(g: MetricGraph) -> StabilizationReport:
    """Prune to the stable graph.  Requires negative Euler characteristic;
    the two chi = 0 cases have non-unique minimal vertex sets and are
    rejected with a diagnostic."""
    chi = euler_char(g)
    if chi >= 0:
        raise ValueError(CHI_ZERO_DIAGNOSTIC if chi == 0 else
                         f"Euler characteristic {chi} > 0: no skeleton")
    steps = []
    cur = g
    while True:
        step = prune_step(cur)
        if step is None:
            break
        cur, rule, v = step
        steps.append((rule, v))
    if not is_stable(cur):
        raise AssertionError("pruning stopped before stability")
    return StabilizationReport(input=g, output=cur, steps=tuple(steps), chi=chi)


def minimal_vertex_characterization(g: MetricGraph) -> set:
    """Vertices that must belong to any semistable vertex set: valence at
    least three or positive weight.  Equals the full vertex set exactly
    when the graph is stable."""
    return {v for v, w in g.vertices if w > 0 or g.valence(v) >= 3}


def tate_skeleton(val_j) -> MetricGraph:
    """Skeleton of an elliptic curve from the valuation of its j-invariant.

    Multiplicative reduction (val j < 0): a circle of circumference
    -val(j).  Otherwise good reduction: a single weight-1 vertex.
    """
    val_j = Fraction(val_j)
    if val_j < 0:
        return MetricGraph.make([("v0", 0)], [("v0", "v0", -val_j)], [])
    return MetricGraph.make([("v0", 1)], [], [])


def abstract_tropicalization(g: int, n: int, graph: MetricGraph):
    """Package a genus-g, n-marked graph as a point of the tropical moduli
    space: checks the numerics, stabilizes when 2-2g-n < 0, and flags the
    boundary case 2-2g-n = 0 (returned unmodified).

    Returns (graph, stabilized: bool).
    """
    if 2 - 2 * g - n > 0:
        raise ValueError(f"2-2g-n = {2 - 2 * g - n} > 0: no tropical curve")
    if len(graph.rays) != n:
        raise ValueError(f"graph has {len(graph.rays)} markings, expected {n}")
    if total_genus(graph) != g:
        raise ValueError(
            f"graph has genus {total_genus(graph)}, expected {g}"
        )
    if 2 - 2 * g - n == 0:
        return graph, False
    return stabilize(graph).output, True
