"""Monomial ideals: minimal generators, membership, colon, sum, product,
intersection, dominance, and the lcm lattice."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .multidegree import (
    Multidegree,
    VariableSet,
    divides,
    gcd,
    lcm,
    quotient,
)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal (antichain) generating set.

    Generators are kept sorted by exponent vector so that equal ideals
    compare equal and render deterministically.  The zero ideal has an
    empty generator tuple.
    """

    variables: VariableSet
    generators: tuple[Multidegree, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.variables != self.variables:
                raise ValueError("generator over a different variable set")
        reduced = _antichain(self.generators)
        object.__setattr__(
            self, "generators", tuple(sorted(reduced, key=Multidegree.sort_key))
        )

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.generators)

    def support(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for g in self.generators:
            out |= g.support()
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _antichain(monomials: Iterable[Multidegree]) -> list[Multidegree]:
    ms = set(monomials)
    return [
        m
        for m in ms
        if not any(other != m and divides(other, m) for other in ms)
    ]


def minimalize(
    variables: VariableSet, monomials: Iterable[Multidegree]
) -> MonomialIdeal:
    """Ideal generated by the given monomials, with redundant ones dropped."""
    return MonomialIdeal(variables, tuple(monomials))


def contains(ideal: MonomialIdeal, m: Multidegree) -> bool:
    """Membership test for a monomial: some generator must divide it."""
    if m.variables != ideal.variables:
        raise ValueError("monomial over a different variable set")
    return any(divides(g, m) for g in ideal.generators)


def colon_by_monomial(ideal: MonomialIdeal, m: Multidegree) -> MonomialIdeal:
    """The colon ideal I : m, generated by u / gcd(u, m) over u in G(I)."""
    return minimalize(
        ideal.variables,
        (quotient(u, gcd(u, m)) for u in ideal.generators),
    )


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(a, b)
    return minimalize(a.variables, a.generators + b.generators)


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(a, b)
    return minimalize(a.variables, (u * v for u in a.generators for v in b.generators))


def ideal_intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection of two monomial ideals via pairwise lcms of generators."""
    _check_same_ring(a, b)
    return minimalize(
        a.variables, (lcm(u, v) for u in a.generators for v in b.generators)
    )


def scale(m: Multidegree, ideal: MonomialIdeal) -> MonomialIdeal:
    """The ideal m*I.  Translation preserves the antichain property, so the
    generator count is unchanged."""
    return minimalize(ideal.variables, (m * u for u in ideal.generators))


def is_dominant(ideal: MonomialIdeal) -> bool:
    """True iff every generator has a variable whose exponent strictly
    exceeds that variable's exponent in every other generator.  The Taylor
    resolution of such an ideal is minimal."""
    gens = ideal.generators
    for g in gens:
        owns = False
        for pos, e in enumerate(g.exponents):
            if e > 0 and all(
                other.exponents[pos] < e for other in gens if other is not g
            ):
                owns = True
                break
        if not owns:
            return False
    return True


def lcm_lattice(ideal: MonomialIdeal) -> frozenset[Multidegree]:
    """All lcms of nonempty subsets of the minimal generators.

    Computed as the closure of the generator set under pairwise lcm, which
    avoids enumerating 2^m subsets.
    """
    points: set[Multidegree] = set(ideal.generators)
    frontier = set(points)
    while frontier:
        new: set[Multidegree] = set()
        for p in frontier:
            for g in ideal.generators:
                q = lcm(p, g)
                if q not in points:
                    new.add(q)
        points |= new
        frontier = new
    return frozenset(points)


def support_of_ideal(ideal: MonomialIdeal) -> frozenset[str]:
    return ideal.support()


def _check_same_ring(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.variables != b.variables:
        raise ValueError("ideals over different variable sets")
