"""Plates: regions cut out by the initial-segment inequalities of a
composition against a subset function, inside the affine slice of total
height. Includes windowed lattice enumeration, maximal affine flats, face
membership, and the juxtaposition map between flats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .boolfun import BooleanFunction, bf_comul_along, hei
from .cones import _constraint_rows, pairing
from .setcomp import Composition, GroundSet, refines, sorted_labels


@dataclass(frozen=True)
class AffinePoint:
    """Exact coordinate vector on a ground set, no sum constraint."""

    ground: GroundSet
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != len(self.ground):
            raise ValueError("coordinate count does not match the ground set")

    @staticmethod
    def of(ground: GroundSet, mapping) -> "AffinePoint":
        return AffinePoint(ground, tuple(mapping[x] for x in ground.labels))

    def coord(self, x) -> int | Fraction:
        return self.coords[self.ground.index(x)]

    def total(self) -> int | Fraction:
        return sum(self.coords) if self.coords else 0


@dataclass(frozen=True)
class Plate:
    H: Composition
    z: BooleanFunction

    def __post_init__(self):
        if self.H.ground != self.z.ground:
            raise ValueError("ground sets differ")


@dataclass(frozen=True)
class FlatSpec:
    """An affine flat fixing the coordinate sum over each lump of F."""

    F: Composition
    heights: tuple[int, ...]

    def __post_init__(self):
        if len(self.heights) != self.F.length():
            raise ValueError("one height per lump required")


def halfspace_contains(A: Iterable, z: BooleanFunction, h: AffinePoint) -> bool:
    """Whether the pairing of h with A is at most z(A). A must be a proper
    nonempty subset; the ambient height equality is checked separately."""
    A = set(A)
    if not A or A == set(z.ground.labels):
        raise ValueError("A must be a proper nonempty subset")
    return pairing(h, A) <= z.value(A)


def initial_segments(H: Composition) -> list[tuple]:
    """The proper nonempty initial segments of H, shortest first."""
    segs = []
    acc: list = []
    for lump in H.lumps[:-1]:
        acc.extend(lump)
        segs.append(sorted_labels(acc))
    return segs


def plate_contains(P: Plate, h: AffinePoint) -> bool:
    """Height equality plus every proper initial-segment inequality."""
    if P.z.ground != h.ground:
        raise ValueError("ground sets differ")
    if h.total() != hei(P.z):
        return False
    return all(pairing(h, seg) <= P.z.value(seg) for seg in initial_segments(P.H))


def max_affine_flat(P: Plate) -> FlatSpec:
    """The flat obtained by forcing every initial-segment inequality to an
    equality: per-lump heights are the consecutive differences of z along H."""
    comps = bf_comul_along(P.z, P.H)
    return FlatSpec(P.H, tuple(hei(c) for c in comps))


def flat_contains(spec: FlatSpec, h: AffinePoint) -> bool:
    if spec.F.ground != h.ground:
        raise ValueError("ground sets differ")
    return all(pairing(h, lump) == a for lump, a in zip(spec.F.lumps, spec.heights))


def window_center(P: Plate) -> AffinePoint:
    """Canonical integer point on the maximal affine flat: within each lump,
    the height is split as evenly as possible, remainders going to the
    canonically first labels."""
    spec = max_affine_flat(P)
    coords = {}
    for lump, a in zip(spec.F.lumps, spec.heights):
        q, r = divmod(a, len(lump))
        for k, x in enumerate(lump):
            coords[x] = q + 1 if k < r else q
    return AffinePoint.of(P.H.ground, coords)


def plate_lattice_points(P: Plate, box) -> tuple[AffinePoint, ...]:
    """Integer plate points h with |h - center| <= bound coordinatewise,
    lexicographically ordered."""
    ground = P.H.ground
    n = len(ground)
    center = window_center(P)
    c = np.array(center.coords, dtype=np.int64) if n else np.zeros(0, dtype=np.int64)
    cands = _kernels.zero_sum_box(n, box.bound) + c
    segs = initial_segments(P.H)
    A = _constraint_rows(ground, segs)
    b = np.array([P.z.value(seg) for seg in segs], dtype=np.int64)
    mask = _kernels.lattice_filter(cands, A, b)
    return tuple(
        AffinePoint(ground, tuple(int(v) for v in row)) for row in cands[mask]
    )


def restrict_point(h: AffinePoint, S: Iterable) -> AffinePoint:
    S = sorted_labels(S)
    return AffinePoint(GroundSet.of(S), tuple(h.coord(x) for x in S))


def flat_mul(points: Sequence[AffinePoint], heights: Sequence[int]) -> AffinePoint:
    """Juxtapose points whose coordinate sums match the prescribed heights."""
    if len(points) != len(heights):
        raise ValueError("one height per point required")
    coords: dict = {}
    ground: GroundSet | None = None
    for pt, a in zip(points, heights):
        if pt.total() != a:
            raise ValueError("coordinate sum does not match the prescribed height")
        ground = pt.ground if ground is None else ground.union(pt.ground)
        for x in pt.ground.labels:
            coords[x] = pt.coord(x)
    if ground is None:
        ground = GroundSet.of(())
    return AffinePoint.of(ground, coords)


def plate_F_face_contains(P: Plate, F: Composition, h: AffinePoint) -> bool:
    """Membership in the face of the plate selected by a coarsening F.

    The face exists only when F <= H; on it, h must lie in the plate and on
    the flat of F whose heights are the consecutive differences of z along F.
    """
    if F.ground != P.H.ground:
        raise ValueError("ground sets differ")
    if not refines(F, P.H):
        return False
    face_flat = FlatSpec(F, tuple(hei(c) for c in bf_comul_along(P.z, F)))
    return plate_contains(P, h) and flat_contains(face_flat, h)
