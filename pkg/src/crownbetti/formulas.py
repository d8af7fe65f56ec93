"""Closed forms for Betti numbers of crown-type edge ideals.

Everything here is pure combinatorics on vertex selections: the multidegrees
carrying nonzero Betti numbers come in two families, the crown-like
selections with k >= 2 complete pairs (multiplicity k - 1) and the
complete-bipartite selections with no pair (multiplicity 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graphs import (
    SubgraphClass,
    SubgraphKind,
    classify_induced,
    complete_bipartite,
    crown,
    generalized_crown,
    theta,
    unbalanced_crown,
)
from .homology import BettiTable
from .multidegree import Multidegree, VariableSet, binomial, xy_variables


def total_betti_closed_form(n: int, i: int) -> int:
    """Total Betti number of the crown edge ideal on n pairs; independent
    of the vertex weights.  Vanishes outside 0 <= i <= 2n - 3."""
    if n < 2:
        raise ValueError(f"crown graph needs n >= 2, got {n}")
    if i < 0:
        return 0
    total = (2 ** (i + 2) - 2) * binomial(n, i + 2)
    for k in range(2, n + 1):
        j = i + 3 - 2 * k
        if j < 0:
            continue
        total += (k - 1) * 2**j * binomial(n, k) * binomial(n - k, j)
    return total


def _selection_theta(
    variables: VariableSet, weights: Sequence[int], x_idx: Iterable[int], y_idx: Iterable[int]
) -> Multidegree:
    powers = {f"x{i}": 1 for i in x_idx}
    powers.update({f"y{j}": weights[j - 1] for j in y_idx})
    return variables.from_dict(powers)


def enumerate_N(
    n: int, weights: Sequence[int], i: int, k: int
) -> frozenset[Multidegree]:
    """Top multidegrees of the crown-like induced subgraphs with exactly k
    complete pairs on i + 3 vertices.

    A selection is k pair indices plus i + 3 - 2k leftover indices, each
    contributing either its x- or its y-vertex; its multidegree is the
    product of the chosen x's and the chosen y's raised to their weights.
    """
    if k < 2 or k > n:
        raise ValueError(f"need 2 <= k <= n, got k = {k}")
    variables = xy_variables(n)
    singles = i + 3 - 2 * k
    if singles < 0:
        return frozenset()
    out: set[Multidegree] = set()
    indices = range(1, n + 1)
    for pairs in combinations(indices, k):
        rest = [r for r in indices if r not in pairs]
        for extra in combinations(rest, singles):
            for sides in range(1 << singles):
                x_idx = set(pairs)
                y_idx = set(pairs)
                for pos, r in enumerate(extra):
                    if sides >> pos & 1:
                        x_idx.add(r)
                    else:
                        y_idx.add(r)
                out.add(_selection_theta(variables, weights, x_idx, y_idx))
    return frozenset(out)


def enumerate_M(n: int, weights: Sequence[int], i: int) -> frozenset[Multidegree]:
    """Top multidegrees of the complete-bipartite induced subgraphs on
    i + 2 vertices with no complete pair and both sides nonempty."""
    variables = xy_variables(n)
    size = i + 2
    out: set[Multidegree] = set()
    for chosen in combinations(range(1, n + 1), size):
        for sides in range(1, (1 << size) - 1):
            x_idx = {r for pos, r in enumerate(chosen) if sides >> pos & 1}
            y_idx = set(chosen) - x_idx
            out.add(_selection_theta(variables, weights, x_idx, y_idx))
    return frozenset(out)


def multigraded_betti_formula(n: int, weights: Sequence[int]) -> BettiTable:
    """Predicted multigraded Betti table of the crown edge ideal:
    multiplicity k - 1 on the k-pair selections, 1 on the pair-free ones."""
    if n < 2:
        raise ValueError(f"crown graph needs n >= 2, got {n}")
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    variables = xy_variables(n)
    entries: dict[tuple[int, Multidegree], int] = {}
    for i in range(0, 2 * n - 2):
        for k in range(2, n + 1):
            for a in enumerate_N(n, weights, i, k):
                entries[(i, a)] = k - 1
        for a in enumerate_M(n, weights, i):
            entries[(i, a)] = 1
    return BettiTable(variables, entries)


def graded_betti_formula(n: int, weights: Sequence[int], i: int, j: int) -> int:
    """Predicted graded Betti number beta_{i,j} of the crown edge ideal."""
    count = sum(
        (k - 1)
        for k in range(2, n + 1)
        for a in enumerate_N(n, weights, i, k)
        if a.degree() == j
    )
    count += sum(1 for a in enumerate_M(n, weights, i) if a.degree() == j)
    return count


def regularity_formula(n: int, weights: Sequence[int]) -> int:
    """Regularity of the crown edge ideal: sum of weights - n + 3."""
    if n < 2:
        raise ValueError(f"crown graph needs n >= 2, got {n}")
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    return sum(weights) - n + 3


@dataclass(frozen=True)
class FamilyTopBetti:
    """Projective dimension and top multigraded Betti entry of a family
    member: the top entry sits at the lcm of all edge-ideal generators."""

    pdim: int
    top_multidegree: Multidegree
    top_value: int


def family_top_betti(
    kind: str, params: Sequence[int], weights: Sequence[int]
) -> FamilyTopBetti:
    """Top Betti data for one of the four families.

    kind is one of "crown" (param s), "unbalanced" (s, t), "generalized"
    (m, s, t), "complete_bipartite" (s, t).  The generalized family's top
    value is m - 1.
    """
    if kind == "crown":
        (s,) = params
        graph = crown(s, weights)
        return FamilyTopBetti(2 * s - 3, theta(graph), s - 1)
    if kind == "unbalanced":
        s, t = params
        graph = unbalanced_crown(s, t, weights)
        return FamilyTopBetti(s + t - 3, theta(graph), t - 1)
    if kind == "generalized":
        m, s, t = params
        graph = generalized_crown(m, s, t, weights)
        return FamilyTopBetti(s + t - 3, theta(graph), m - 1)
    if kind == "complete_bipartite":
        s, t = params
        graph = complete_bipartite(s, t, weights)
        return FamilyTopBetti(s + t - 2, theta(graph), 1)
    raise ValueError(f"unknown family kind: {kind!r}")


def predicted_contribution(
    n: int, weights: Sequence[int], subset: Iterable[str]
) -> Optional[tuple[int, Multidegree, int]]:
    """Top Betti contribution of the induced subgraph on a vertex subset.

    Crown-like selections with k pairs contribute (|W| - 3, theta, k - 1);
    pair-free two-sided selections contribute (|W| - 2, theta, 1);
    one-pair and degenerate selections contribute nothing.
    """
    chosen = set(subset)
    cls = classify_induced(n, chosen)
    if cls.kind in (SubgraphKind.ONE_PAIR, SubgraphKind.DEGENERATE):
        return None
    variables = xy_variables(n)
    x_idx = {int(v[1:]) for v in chosen if v.startswith("x")}
    y_idx = {int(v[1:]) for v in chosen if v.startswith("y")}
    top = _selection_theta(variables, weights, x_idx, y_idx)
    if cls.kind is SubgraphKind.CROWN_LIKE:
        return len(chosen) - 3, top, cls.pairs - 1
    return len(chosen) - 2, top, 1
