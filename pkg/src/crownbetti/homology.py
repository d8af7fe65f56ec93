"""Brute-force multigraded Betti numbers via upper Koszul complexes.

For a monomial ideal I and a multidegree a, the faces of the upper Koszul
complex at a are the squarefree vectors b <= supp(a) with x^(a-b) in I.
The rank of the (i-1)-st reduced homology of that complex over the chosen
field is the multigraded Betti number beta_{i,a}(I).  Only multidegrees in
the lcm lattice of I can carry a nonzero Betti number, so the oracle
evaluates exactly those (an audit mode sweeps the whole box below the lcm
of all generators instead).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian_product

import numpy as np

from .ideals import MonomialIdeal, lcm_lattice
from .linalg import rank_char0, rank_mod_p
from .multidegree import Multidegree, VariableSet, lcm_of

DEFAULT_PRIME = 32003


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: characteristic 0 (rationals) or a prime p."""

    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        c = self.characteristic
        if c == 0:
            return
        if c < 2 or any(c % q == 0 for q in range(2, int(c**0.5) + 1)):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")

    def rank(self, matrix: np.ndarray) -> int:
        if self.characteristic == 0:
            return rank_char0(matrix)
        return rank_mod_p(matrix, self.characteristic)


@dataclass(frozen=True)
class SimplicialComplexOnVars:
    """Simplicial complex on a subset of variable labels.

    ``faces`` is downward closed and contains the empty face whenever the
    complex is nonvoid; the void complex has no faces at all.
    """

    ground: tuple[str, ...]
    faces: frozenset[frozenset[str]]

    def is_void(self) -> bool:
        return not self.faces


def upper_koszul_complex(
    ideal: MonomialIdeal, a: Multidegree
) -> SimplicialComplexOnVars:
    """Faces are the squarefree b within supp(a) such that x^(a-b) lies in I."""
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("upper Koszul complex requires a nonzero, non-unit ideal")
    ground = tuple(
        v for v, e in zip(a.variables.names, a.exponents) if e > 0
    )
    face_masks = _koszul_face_masks(ideal, a, ground)
    faces = frozenset(
        frozenset(v for k, v in enumerate(ground) if mask >> k & 1)
        for mask in face_masks
    )
    return SimplicialComplexOnVars(ground, faces)


def _koszul_face_masks(
    ideal: MonomialIdeal, a: Multidegree, ground: tuple[str, ...]
) -> list[int]:
    """Bitmask encoding of the upper Koszul faces, over the ground tuple."""
    s = len(ground)
    gens = np.array([g.exponents for g in ideal.generators], dtype=np.int64)
    avec = np.array(a.exponents, dtype=np.int64)
    idx = np.array([a.variables.index(v) for v in ground], dtype=np.intp)
    masks = np.arange(1 << s, dtype=np.int64)
    # b as 0/1 rows over the ground-set columns
    b = (masks[:, None] >> np.arange(s)) & 1
    reduced = np.repeat(avec[None, :], 1 << s, axis=0)
    reduced[:, idx] -= b
    member = (reduced[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
    return [int(m) for m in masks[member]]


def reduced_homology_ranks(
    complex_: SimplicialComplexOnVars, field: FieldSpec
) -> dict[int, int]:
    """Reduced homology ranks by dimension, empty face at dimension -1.

    The void complex has no homology at all; the complex {Ø} has rank 1
    in dimension -1.  Zero ranks are omitted from the result.
    """
    if complex_.is_void():
        return {}
    ground = complex_.ground
    pos = {v: k for k, v in enumerate(ground)}
    masks = sorted(
        sum(1 << pos[v] for v in face) for face in complex_.faces
    )
    return _homology_from_masks(masks, len(ground), field)


def _homology_from_masks(
    face_masks: list[int], ground_size: int, field: FieldSpec
) -> dict[int, int]:
    by_dim: dict[int, list[int]] = {}
    for mask in face_masks:
        by_dim.setdefault(bin(mask).count("1") - 1, []).append(mask)
    if -1 not in by_dim:
        raise ValueError("nonvoid complex must contain the empty face")
    top = max(by_dim)
    counts = {d: len(by_dim[d]) for d in by_dim}
    # rank of the boundary map from dimension d to d-1, for d = 0 .. top+1
    boundary_rank = {0: 1 if 0 in by_dim else 0, top + 1: 0}
    for d in range(1, top + 1):
        rows = {m: i for i, m in enumerate(by_dim[d - 1])}
        cols = by_dim[d]
        mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for j, mask in enumerate(cols):
            sign = 1
            for k in range(ground_size):
                if mask >> k & 1:
                    mat[rows[mask ^ (1 << k)], j] = sign
                    sign = -sign
        boundary_rank[d] = field.rank(mat)
    ranks: dict[int, int] = {}
    for d in range(-1, top + 1):
        r = counts.get(d, 0) - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
        if r:
            ranks[d] = r
    return ranks


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers: (homological index, multidegree) -> count.

    Zero entries are never stored.  Aggregations to graded and total Betti
    numbers, projective dimension and regularity live here.
    """

    variables: VariableSet
    entries: dict[tuple[int, Multidegree], int]

    def __post_init__(self):
        for (i, a), c in self.entries.items():
            if c <= 0:
                raise ValueError(f"zero/negative multiplicity at ({i}, {a})")
            if i < 0:
                raise ValueError(f"negative homological index {i}")
            if a.variables != self.variables:
                raise ValueError("entry multidegree over a different variable set")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.variables == other.variables and self.entries == other.entries

    def __hash__(self):
        return hash((self.variables, frozenset(self.entries.items())))

    def entry(self, i: int, a: Multidegree) -> int:
        return self.entries.get((i, a), 0)

    def is_empty(self) -> bool:
        return not self.entries

    def graded(self) -> dict[tuple[int, int], int]:
        """Graded Betti numbers beta_{i,j}, aggregating by total degree."""
        self._require_nonempty()
        out: dict[tuple[int, int], int] = {}
        for (i, a), c in self.entries.items():
            key = (i, a.degree())
            out[key] = out.get(key, 0) + c
        return out

    def total(self) -> dict[int, int]:
        self._require_nonempty()
        out: dict[int, int] = {}
        for (i, _), c in self.entries.items():
            out[i] = out.get(i, 0) + c
        return out

    def total_sequence(self) -> list[int]:
        t = self.total()
        return [t.get(i, 0) for i in range(max(t) + 1)]

    def pdim(self) -> int:
        self._require_nonempty()
        return max(i for i, _ in self.entries)

    def regularity(self) -> int:
        self._require_nonempty()
        return max(a.degree() - i for (i, a) in self.entries)

    def quotient_shifted(self) -> BettiTable:
        """Presentation as Betti numbers of R/I: the index shifts up by one.

        The rank-one entry of R itself in homological degree 0 is not
        represented (it has multidegree 0 and is constant across ideals).
        """
        return BettiTable(
            self.variables, {(i + 1, a): c for (i, a), c in self.entries.items()}
        )

    def _require_nonempty(self) -> None:
        if not self.entries:
            raise ValueError("empty Betti table")


def multigraded_betti(
    ideal: MonomialIdeal,
    field: FieldSpec = FieldSpec(),
    audit_full_box: bool = False,
) -> BettiTable:
    """Complete multigraded Betti table of a nonzero, non-unit monomial ideal.

    By default only lcm-lattice multidegrees are evaluated; with
    ``audit_full_box`` every multidegree componentwise below the lcm of all
    generators is evaluated, as a cross-check of the lattice restriction.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("Betti numbers computed only for nonzero, non-unit ideals")
    if audit_full_box:
        top = lcm_of(ideal.generators)
        points = [
            Multidegree(ideal.variables, exps)
            for exps in cartesian_product(*(range(e + 1) for e in top.exponents))
            if any(exps)
        ]
    else:
        points = sorted(lcm_lattice(ideal), key=Multidegree.sort_key)
    entries: dict[tuple[int, Multidegree], int] = {}
    for a in points:
        ground = tuple(v for v, e in zip(a.variables.names, a.exponents) if e > 0)
        masks = _koszul_face_masks(ideal, a, ground)
        if not masks:
            continue
        for d, r in _homology_from_masks(masks, len(ground), field).items():
            entries[(d + 1, a)] = r
    return BettiTable(ideal.variables, entries)
