"""Weighted oriented graphs, their edge ideals, and the crown-type families.

A weighted oriented graph carries a positive integer weight on each vertex;
its edge ideal is generated by tail * head^weight(head) over the directed
edges.  The four families here (crown, unbalanced crown, generalized crown,
complete bipartite) all live on vertex sets {x1..xs} u {y1..yt} with every
edge oriented x -> y.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .ideals import MonomialIdeal, minimalize
from .multidegree import Multidegree, VariableSet, lcm_of, xy_variables


@dataclass(frozen=True)
class WeightedOrientedGraph:
    vertices: VariableSet
    edges: frozenset[tuple[str, str]]
    weights: Mapping[str, int]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(self, "weights", dict(self.weights))
        names = set(self.vertices.names)
        seen_undirected: set[frozenset[str]] = set()
        for tail, head in self.edges:
            if tail not in names or head not in names:
                raise ValueError(f"edge ({tail}, {head}) references unknown vertex")
            if tail == head:
                raise ValueError(f"loop at {tail}")
            pair = frozenset((tail, head))
            if pair in seen_undirected:
                raise ValueError(f"multiple edges between {tail} and {head}")
            seen_undirected.add(pair)
        for v in self.vertices.names:
            w = self.weights.get(v, 1)
            if w < 1:
                raise ValueError(f"weight of {v} must be positive, got {w}")
            self.weights.setdefault(v, 1)

    def weight(self, v: str) -> int:
        return self.weights[v]

    def non_isolated(self) -> frozenset[str]:
        out: set[str] = set()
        for tail, head in self.edges:
            out.add(tail)
            out.add(head)
        return frozenset(out)


def edge_ideal(graph: WeightedOrientedGraph) -> MonomialIdeal:
    """The edge ideal: one generator tail * head^weight(head) per edge."""
    gens = []
    for tail, head in graph.edges:
        gens.append(
            graph.vertices.variable(tail) * graph.vertices.variable(head, graph.weight(head))
        )
    return minimalize(graph.vertices, gens)


def _xy_weights(n_y: int, weights: Sequence[int]) -> dict[str, int]:
    if len(weights) != n_y:
        raise ValueError(f"expected {n_y} weights, got {len(weights)}")
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive integers")
    return {f"y{j}": w for j, w in enumerate(weights, start=1)}


def crown(n: int, weights: Sequence[int]) -> WeightedOrientedGraph:
    """Crown graph on x1..xn, y1..yn: every edge (xi, yj) with i != j."""
    if n < 2:
        raise ValueError(f"crown graph needs n >= 2, got {n}")
    edges = {
        (f"x{i}", f"y{j}") for i in range(1, n + 1) for j in range(1, n + 1) if i != j
    }
    return WeightedOrientedGraph(xy_variables(n), frozenset(edges), _xy_weights(n, weights))


def _bipartite_variables(s: int, t: int) -> VariableSet:
    return VariableSet(
        tuple(f"x{i}" for i in range(1, s + 1)) + tuple(f"y{j}" for j in range(1, t + 1))
    )


def unbalanced_crown(s: int, t: int, weights: Sequence[int]) -> WeightedOrientedGraph:
    """Unbalanced crown on x1..xs, y1..yt with 1 < t < s: edges (xi, yj), i != j."""
    if not (1 < t < s):
        raise ValueError(f"unbalanced crown needs 1 < t < s, got (s, t) = ({s}, {t})")
    edges = {
        (f"x{i}", f"y{j}") for i in range(1, s + 1) for j in range(1, t + 1) if i != j
    }
    return WeightedOrientedGraph(
        _bipartite_variables(s, t), frozenset(edges), _xy_weights(t, weights)
    )


def generalized_crown(m: int, s: int, t: int, weights: Sequence[int]) -> WeightedOrientedGraph:
    """Generalized crown on x1..xs, y1..yt: x1..xm miss their partner yi,
    while x_{m+1}..xs are joined to every yj.  Requires 1 < m < s and m < t.

    The m = t corner is not admitted; that shape is reachable as an induced
    subgraph of a crown graph instead.
    """
    if not (1 < m < s and m < t):
        raise ValueError(
            f"generalized crown needs 1 < m < s and m < t, got (m, s, t) = ({m}, {s}, {t})"
        )
    edges = {
        (f"x{i}", f"y{j}") for i in range(1, m + 1) for j in range(1, t + 1) if i != j
    } | {(f"x{i}", f"y{j}") for i in range(m + 1, s + 1) for j in range(1, t + 1)}
    return WeightedOrientedGraph(
        _bipartite_variables(s, t), frozenset(edges), _xy_weights(t, weights)
    )


def complete_bipartite(s: int, t: int, weights: Sequence[int]) -> WeightedOrientedGraph:
    """Complete bipartite graph on x1..xs, y1..yt, all edges oriented x -> y."""
    if s < 1 or t < 1:
        raise ValueError(f"complete bipartite needs s, t >= 1, got ({s}, {t})")
    edges = {(f"x{i}", f"y{j}") for i in range(1, s + 1) for j in range(1, t + 1)}
    return WeightedOrientedGraph(
        _bipartite_variables(s, t), frozenset(edges), _xy_weights(t, weights)
    )


def induced_subgraph(
    graph: WeightedOrientedGraph, subset: Iterable[str]
) -> WeightedOrientedGraph:
    """Subgraph on the given vertices, keeping edges with both ends inside.

    The ambient variable set is retained so that multidegrees of the
    subgraph's edge ideal remain comparable with the parent's.
    """
    keep = set(subset)
    unknown = keep - set(graph.vertices.names)
    if unknown:
        raise ValueError(f"vertices not in the graph: {sorted(unknown)}")
    edges = {(a, b) for a, b in graph.edges if a in keep and b in keep}
    return WeightedOrientedGraph(graph.vertices, frozenset(edges), dict(graph.weights))


class SubgraphKind(Enum):
    CROWN_LIKE = "crown_like"
    COMPLETE_BIPARTITE = "complete_bipartite"
    ONE_PAIR = "one_pair"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class SubgraphClass:
    kind: SubgraphKind
    pairs: int = 0

    def __post_init__(self):
        if self.kind is SubgraphKind.CROWN_LIKE and self.pairs < 2:
            raise ValueError("crown-like class needs at least 2 complete pairs")


def classify_induced(n: int, subset: Iterable[str]) -> SubgraphClass:
    """Classify an induced subgraph of the crown graph on 2n vertices by its
    number of complete pairs {xi, yi}.

    k >= 2 pairs gives the crown-like class whose top Betti number is k - 1;
    zero pairs with both sides present gives a complete bipartite subgraph;
    one pair, or an edgeless selection, contributes nothing.
    """
    chosen = set(subset)
    unknown = chosen - set(xy_variables(n).names)
    if unknown:
        raise ValueError(f"vertices not in the crown graph: {sorted(unknown)}")
    x_idx = {int(v[1:]) for v in chosen if v.startswith("x")}
    y_idx = {int(v[1:]) for v in chosen if v.startswith("y")}
    k = len(x_idx & y_idx)
    has_edge = any(i != j for i in x_idx for j in y_idx)
    if not has_edge:
        return SubgraphClass(SubgraphKind.DEGENERATE)
    if k >= 2:
        return SubgraphClass(SubgraphKind.CROWN_LIKE, pairs=k)
    if k == 1:
        return SubgraphClass(SubgraphKind.ONE_PAIR, pairs=1)
    return SubgraphClass(SubgraphKind.COMPLETE_BIPARTITE)


def theta(graph: WeightedOrientedGraph) -> Multidegree:
    """lcm of the minimal generators of the edge ideal."""
    ideal = edge_ideal(graph)
    if ideal.is_zero():
        raise ValueError("no edges: theta is undefined for an edgeless graph")
    return lcm_of(ideal.generators)
