"""Lattice-point bialgebras on two carriers.

Monomials indexed by coroot-cone points multiply by juxtaposition and
comultiply by projecting onto a face, with a formal zero absorbing the
off-face cases. Global sections of a subset function are the integer points
of its base polytope; they carry the same product/face structure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .boolfun import BooleanFunction, bf_comul, bf_mul, hei
from .cones import (
    CoweightVector,
    _constraint_rows,
    cone_contains,
    cone_face,
    cone_product_map,
    cone_restrict,
    pairing,
)
from .plates import AffinePoint, restrict_point
from .preposet import AugPreposet, o_mul
from .setcomp import sorted_labels


@dataclass(frozen=True)
class TensorWord:
    """An ordered tuple of lattice monomial exponents, or the formal zero.

    The zero is encoded by parts=None and absorbs every operation.
    """

    parts: Optional[tuple]

    @staticmethod
    def zero() -> "TensorWord":
        return TensorWord(None)

    @property
    def is_zero(self) -> bool:
        return self.parts is None


def co_mul(
    h1: CoweightVector, p: AugPreposet, h2: CoweightVector, q: AugPreposet
) -> CoweightVector:
    """Juxtapose two cone monomial exponents; lands in the cone of p|q."""
    if not cone_contains(p, h1):
        raise ValueError("first exponent is outside its cone")
    if not cone_contains(q, h2):
        raise ValueError("second exponent is outside its cone")
    out = cone_product_map(h1, h2)
    assert cone_contains(o_mul(p, q), out)
    return out


def co_comul(h: CoweightVector, p: AugPreposet, S: Iterable, T: Iterable) -> TensorWord:
    """Project a cone monomial onto the (S,T)-face and split, or return zero.

    The exponent splits exactly when it lies in the face cone; membership
    there forces the pairing with S to vanish, so both halves are zero-sum.
    """
    if not cone_contains(p, h):
        raise ValueError("exponent is outside its cone")
    S, T = sorted_labels(S), sorted_labels(T)
    face = cone_face(p, S, T)
    if not cone_contains(face, h):
        return TensorWord.zero()
    return TensorWord((cone_restrict(h, S), cone_restrict(h, T)))


@dataclass(frozen=True)
class SectionBasis:
    """The integer points of the base polytope of z, in lexicographic order."""

    z: BooleanFunction
    points: tuple[AffinePoint, ...]

    def __post_init__(self):
        n = len(self.z.ground)
        full = (1 << n) - 1
        for h in self.points:
            if h.ground != self.z.ground:
                raise ValueError("point ground does not match z")
            if h.total() != hei(self.z):
                raise ValueError("point has the wrong coordinate sum")
            for m in range(1, full):
                A = self.z.subset_of_mask(m)
                if pairing(h, A) > self.z.values[m]:
                    raise ValueError("point violates a subset inequality")


def global_sections(z: BooleanFunction) -> SectionBasis:
    """All integer h with coordinate sum hei(z) and pairing(h,A) <= z(A) for
    every nonempty proper A. Finite: z(I) - z(I minus i) <= h_i <= z({i})."""
    ground = z.ground
    n = len(ground)
    full = (1 << n) - 1
    lo = np.array(
        [z.values[full] - z.values[full ^ (1 << i)] for i in range(n)], dtype=np.int64
    )
    hi = np.array([z.values[1 << i] for i in range(n)], dtype=np.int64)
    cands = _kernels.ranged_sum_box(lo, hi, hei(z))
    subsets = [z.subset_of_mask(m) for m in range(1, full)]
    A = _constraint_rows(ground, subsets)
    b = np.array([z.values[m] for m in range(1, full)], dtype=np.int64)
    mask = _kernels.lattice_filter(cands, A, b)
    pts = tuple(
        AffinePoint(ground, tuple(int(v) for v in row)) for row in cands[mask]
    )
    return SectionBasis(z, pts)


def _juxtapose(h1: AffinePoint, h2: AffinePoint) -> AffinePoint:
    ground = h1.ground.union(h2.ground)  # raises on overlap
    coords = tuple(
        h1.coord(x) if x in h1.ground else h2.coord(x) for x in ground.labels
    )
    return AffinePoint(ground, coords)


def sections_mul(s1: SectionBasis, s2: SectionBasis) -> SectionBasis:
    """Basis of the product: all juxtapositions, carried by bf_mul."""
    z = bf_mul(s1.z, s2.z)
    pts = sorted(
        (_juxtapose(h1, h2) for h1 in s1.points for h2 in s2.points),
        key=lambda h: h.coords,
    )
    return SectionBasis(z, tuple(pts))


def sections_comul(s: SectionBasis, h: AffinePoint, S: Iterable, T: Iterable) -> TensorWord:
    """Split a section point along I = S ⊔ T when it lies on the S-maximal
    face of the polytope, i.e. pairing(h,S) = z(S); zero otherwise."""
    if h not in s.points:
        raise ValueError("point is not a section")
    S, T = sorted_labels(S), sorted_labels(T)
    if set(S) & set(T) or set(S) | set(T) != set(s.z.ground.labels):
        raise ValueError("S,T do not decompose the ground set")
    if pairing(h, S) != s.z.value(S):
        return TensorWord.zero()
    return TensorWord((restrict_point(h, S), restrict_point(h, T)))


def sections_comul_components(
    s: SectionBasis, S: Iterable, T: Iterable
) -> tuple[SectionBasis, SectionBasis]:
    """The two carrier bases a nonzero sections_comul lands in."""
    z1, z2 = bf_comul(s.z, S, T)
    return global_sections(z1), global_sections(z2)
