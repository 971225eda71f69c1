"""Integer-valued functions on the subsets of a ground set, vanishing on the
empty set, with their product, two-sided coproduct, and the modular-shift
equivalence.

Values are stored densely, indexed by bitmask over the canonical label order.
Ground sets are capped at 12 labels.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .setcomp import Bijection, Composition, GroundSet, sorted_labels

_SIZE_CAP = 12


@dataclass(frozen=True)
class BooleanFunction:
    ground: GroundSet
    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.ground)
        if n > _SIZE_CAP:
            raise ValueError(f"ground sets capped at {_SIZE_CAP} labels")
        if len(self.values) != 1 << n:
            raise ValueError("dense value table has the wrong size")
        if self.values[0] != 0:
            raise ValueError("the empty set must map to zero")

    @staticmethod
    def from_callable(ground: GroundSet, fn: Callable[[frozenset], int]) -> "BooleanFunction":
        n = len(ground)
        vals = []
        for m in range(1 << n):
            A = frozenset(x for k, x in enumerate(ground.labels) if m >> k & 1)
            vals.append(int(fn(A)))
        return BooleanFunction(ground, tuple(vals))

    @staticmethod
    def zero(ground: GroundSet) -> "BooleanFunction":
        return BooleanFunction(ground, (0,) * (1 << len(ground)))

    def mask_of(self, A: Iterable) -> int:
        m = 0
        for x in A:
            m |= 1 << self.ground.index(x)
        return m

    def value(self, A: Iterable) -> int:
        return self.values[self.mask_of(A)]

    def subset_of_mask(self, m: int) -> tuple:
        return tuple(x for k, x in enumerate(self.ground.labels) if m >> k & 1)


def hei(z: BooleanFunction) -> int:
    """The value on the full ground set."""
    return z.values[-1]


def bf_mul(z1: BooleanFunction, z2: BooleanFunction) -> BooleanFunction:
    """(z1|z2)(A) = z1(A ∩ S) + z2(A ∩ T) over the disjoint union."""
    ground = z1.ground.union(z2.ground)  # raises on overlap
    pos1 = [ground.index(x) for x in z1.ground.labels]
    pos2 = [ground.index(x) for x in z2.ground.labels]
    vals = []
    for m in range(1 << len(ground)):
        m1 = sum(1 << k for k, p in enumerate(pos1) if m >> p & 1)
        m2 = sum(1 << k for k, p in enumerate(pos2) if m >> p & 1)
        vals.append(z1.values[m1] + z2.values[m2])
    return BooleanFunction(ground, tuple(vals))


def bf_comul(
    z: BooleanFunction, S: Iterable, T: Iterable
) -> tuple[BooleanFunction, BooleanFunction]:
    """The two-sided coproduct along the decomposition I = S ⊔ T.

    The S half is plain restriction; the T half is the shifted restriction
    A ↦ z(A ⊔ S) − z(S).
    """
    S, T = sorted_labels(S), sorted_labels(T)
    if set(S) & set(T) or set(S) | set(T) != set(z.ground.labels):
        raise ValueError("S,T do not decompose the ground set")
    gS, gT = GroundSet.of(S), GroundSet.of(T)
    maskS = z.mask_of(S)
    posS = [z.ground.index(x) for x in S]
    posT = [z.ground.index(x) for x in T]
    valsS = []
    for m in range(1 << len(S)):
        mm = sum(1 << p for k, p in enumerate(posS) if m >> k & 1)
        valsS.append(z.values[mm])
    valsT = []
    for m in range(1 << len(T)):
        mm = sum(1 << p for k, p in enumerate(posT) if m >> k & 1)
        valsT.append(z.values[mm | maskS] - z.values[maskS])
    return BooleanFunction(gS, tuple(valsS)), BooleanFunction(gT, tuple(valsT))


def bf_comul_along(z: BooleanFunction, F: Composition) -> tuple[BooleanFunction, ...]:
    """Iterated coproduct along all lumps of F, left to right."""
    if F.ground != z.ground:
        raise ValueError("ground sets differ")
    out = []
    rest = z
    remaining = list(F.lumps)
    for lump in F.lumps:
        remaining.pop(0)
        others = [x for l in remaining for x in l]
        left, rest = bf_comul(rest, lump, others)
        out.append(left)
    return tuple(out)


def z_of_point(ground: GroundSet, h) -> BooleanFunction:
    """The modular function of an integer vector: A ↦ sum of h over A.

    h may be a mapping from labels or a sequence aligned with the canonical
    order; no zero-sum requirement.
    """
    if hasattr(h, "coord"):
        vec = [h.coord(x) for x in ground.labels]
    elif isinstance(h, dict):
        vec = [h[x] for x in ground.labels]
    else:
        vec = list(h)
        if len(vec) != len(ground):
            raise ValueError("vector length does not match the ground set")
    vals = []
    for m in range(1 << len(ground)):
        vals.append(sum(v for k, v in enumerate(vec) if m >> k & 1))
    return BooleanFunction(ground, tuple(vals))


def bf_equivalent(z1: BooleanFunction, z2: BooleanFunction) -> Optional[dict]:
    """The unique integer vector h with z2 = z1 + (modular of h), if any.

    Returned as a label -> int mapping; None when the difference is not
    additive over singletons.
    """
    if z1.ground != z2.ground:
        raise ValueError("ground sets differ")
    ground = z1.ground
    h = {x: z2.value([x]) - z1.value([x]) for x in ground.labels}
    zh = z_of_point(ground, h)
    for m in range(1 << len(ground)):
        if z2.values[m] - z1.values[m] != zh.values[m]:
            return None
    return h


def is_generalized_permutohedron(z: BooleanFunction) -> bool:
    """Submodularity: z(A) + z(B) >= z(A ∪ B) + z(A ∩ B) for all A, B."""
    n = len(z.ground)
    vals = z.values
    for a in range(1 << n):
        for b in range(a + 1, 1 << n):
            if vals[a] + vals[b] < vals[a | b] + vals[a & b]:
                return False
    return True


def relabel_bf(sigma: Bijection, z: BooleanFunction) -> BooleanFunction:
    """Pull back along a bijection: the value at A is the value at sigma(A)."""
    if sigma.target != z.ground:
        raise ValueError("bijection target does not match the ground set")
    ground = sigma.source

    def fn(A: frozenset) -> int:
        return z.value([sigma(x) for x in A])

    return BooleanFunction.from_callable(ground, fn)
