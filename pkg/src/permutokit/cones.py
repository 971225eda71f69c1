"""Coroot cones indexed by preposets: membership, windowed lattice points,
products, and faces.

The cone of a preposet p lives in the zero-sum lattice. Membership is decided
by the halfspace description: the pairing with every admissible upward split
of p must be nonpositive. The generator description (nonnegative spans of
coroots) is kept for test oracles only.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .preposet import (
    AugPreposet,
    Bottom,
    Preposet,
    is_bottom,
    o_mul,
    restrict_preposet,
    split_admissible,
    upward_pairs,
)
from .setcomp import GroundSet, sorted_labels


@dataclass(frozen=True)
class CoweightVector:
    """Exact vector on a ground set with coordinate sum zero."""

    ground: GroundSet
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != len(self.ground):
            raise ValueError("coordinate count does not match the ground set")
        if sum(self.coords) != 0:
            raise ValueError("coordinates must sum to zero")

    @staticmethod
    def of(ground: GroundSet, mapping) -> "CoweightVector":
        return CoweightVector(ground, tuple(mapping[x] for x in ground.labels))

    @staticmethod
    def zero(ground: GroundSet) -> "CoweightVector":
        return CoweightVector(ground, (0,) * len(ground))

    def coord(self, x) -> int | Fraction:
        return self.coords[self.ground.index(x)]

    def __neg__(self) -> "CoweightVector":
        return CoweightVector(self.ground, tuple(-c for c in self.coords))

    def __add__(self, other: "CoweightVector") -> "CoweightVector":
        if self.ground != other.ground:
            raise ValueError("ground sets differ")
        return CoweightVector(
            self.ground, tuple(a + b for a, b in zip(self.coords, other.coords))
        )


@dataclass(frozen=True)
class Box:
    """An enumeration window: the L-infinity ball of radius `bound`."""

    bound: int

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("bound must be nonnegative")


def coroot(i1, i2, ground: GroundSet) -> CoweightVector:
    """The vector +1 at i1, -1 at i2, zero elsewhere."""
    if i1 == i2:
        raise ValueError("coroot labels must be distinct")
    if i1 not in ground or i2 not in ground:
        raise ValueError("labels outside the ground set")
    coords = [0] * len(ground)
    coords[ground.index(i1)] = 1
    coords[ground.index(i2)] = -1
    return CoweightVector(ground, tuple(coords))


def pairing(h, S: Iterable) -> int | Fraction:
    """Sum of the coordinates of h over the subset S."""
    S = set(S)
    if not S <= set(h.ground.labels):
        raise ValueError("S is not a subset of the ground set")
    return sum(h.coord(x) for x in S) if S else 0


def cone_contains(p: AugPreposet, h) -> bool:
    """Halfspace membership test. The bottom cone contains nothing."""
    if is_bottom(p):
        return False
    if p.ground != h.ground:
        raise ValueError("ground sets differ")
    return all(pairing(h, S) <= 0 for S, _ in upward_pairs(p))


def cone_generators(p: Preposet) -> tuple[CoweightVector, ...]:
    """The generating coroots: one for each related pair, oriented downward."""
    return tuple(coroot(b, a, p.ground) for a, b in p.pairs)


def _constraint_rows(ground: GroundSet, subsets: Sequence[tuple]) -> np.ndarray:
    A = np.zeros((len(subsets), len(ground)), dtype=np.int64)
    for r, S in enumerate(subsets):
        for x in S:
            A[r, ground.index(x)] = 1
    return A


def cone_lattice_points(p: AugPreposet, box: Box) -> tuple[CoweightVector, ...]:
    """Integer zero-sum vectors in the window that lie in the cone of p,
    lexicographically ordered."""
    if is_bottom(p):
        return ()
    ground = p.ground
    cands = _kernels.zero_sum_box(len(ground), box.bound)
    ups = [S for S, _ in upward_pairs(p)]
    A = _constraint_rows(ground, ups)
    b = np.zeros(len(ups), dtype=np.int64)
    mask = _kernels.lattice_filter(cands, A, b)
    return tuple(
        CoweightVector(ground, tuple(int(v) for v in row)) for row in cands[mask]
    )


def cone_product_map(h1: CoweightVector, h2: CoweightVector) -> CoweightVector:
    """Juxtaposition onto the disjoint union of grounds."""
    ground = h1.ground.union(h2.ground)  # raises on overlap
    coords = tuple(
        h1.coord(x) if x in h1.ground else h2.coord(x) for x in ground.labels
    )
    return CoweightVector(ground, coords)


def cone_restrict(h, S: Iterable) -> CoweightVector:
    """Coordinate restriction; the result must again be zero-sum."""
    S = sorted_labels(S)
    return CoweightVector(GroundSet.of(S), tuple(h.coord(x) for x in S))


def cone_face(p: AugPreposet, S: Iterable, T: Iterable) -> AugPreposet:
    """The preposet indexing the face of the cone of p cut by the split (S,T).

    When (S,T) <= p this is the disjoint union of the two restrictions, viewed
    on the full ground set; otherwise the cone has no such face and the bottom
    is returned.
    """
    S, T = sorted_labels(S), sorted_labels(T)
    if is_bottom(p):
        return Bottom(p.ground)
    if set(S) & set(T) or set(S) | set(T) != set(p.ground.labels):
        raise ValueError("S,T do not decompose the ground set")
    if not split_admissible(p, S, T):
        return Bottom(p.ground)
    if not S or not T:
        return p
    return o_mul(restrict_preposet(p, S), restrict_preposet(p, T))
