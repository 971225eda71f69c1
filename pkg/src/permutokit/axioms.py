"""Instance-agnostic law harness for the concatenation/splitting algebras in
this package.

A BimonoidInstance packages binary multiplication, binary comultiplication,
relabeling, and an element source. The harness lifts the binary operations to
arbitrary refinement pairs by iterated merging/splitting, verifies that the
lift does not depend on the merge order, and checks naturality,
associativity, coassociativity, the mixed square law, its general
two-composition form, and lump-permutation naturality.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .boolfun import BooleanFunction, bf_comul, bf_mul, relabel_bf
from .points import PermPoint, point_comul, point_mul, point_relabel
from .preposet import (
    Bottom,
    enumerate_aug_preposets,
    is_bottom,
    o_comul,
    o_mul,
    relabel_preposet,
)
from .setcomp import (
    Bijection,
    Composition,
    GroundSet,
    Perm,
    all_compositions,
    concatenate,
    hat_beta,
    ordered_decompositions,
    permute_lumps,
    refines,
    relabel,
    restrict,
    sorted_labels,
    tits_product,
    two_block_decompositions,
)


@dataclass(frozen=True)
class LawReport:
    law: str
    checked: int
    passed: bool
    counterexample: Optional[str] = None


@dataclass(frozen=True)
class BimonoidInstance:
    """A carrier of binary operations the harness can exercise.

    elements(ground, rng, budget) returns at most `budget` elements over the
    ground set; enumerable instances return their full population when it
    fits the budget. mul takes two elements over disjoint grounds; comul
    takes an element and an ordered decomposition of its ground set; relabel
    takes a bijection whose target is the element's ground set. zero_of
    builds the absorbing element (pointed instances only).
    """

    name: str
    pointed: bool
    enumerable: bool
    elements: Callable
    mul: Callable
    comul: Callable
    relabel: Callable
    ground_of: Callable
    zero_of: Optional[Callable] = None
    is_zero: Optional[Callable] = None


@lru_cache(maxsize=None)
def _comps(ground: GroundSet) -> tuple[Composition, ...]:
    return tuple(all_compositions(ground))


def lift_mul(inst, F: Composition, G: Composition, elems, rng=None):
    """Merge a tuple over the lumps of F down to a tuple over the lumps of a
    coarsening G, by iterated binary multiplication within each G-lump.

    rng=None merges left to right; a generator picks random adjacent pairs.
    """
    if not refines(G, F):
        raise ValueError("G must be a coarsening of F")
    if len(elems) != F.length():
        raise ValueError("one element per lump of F required")
    for e, lump in zip(elems, F.lumps):
        if inst.ground_of(e) != GroundSet.of(lump):
            raise ValueError("element over the wrong ground set")
    out = []
    i = 0
    for T in G.lumps:
        need, acc = set(T), set()
        group = []
        while acc != need:
            group.append(elems[i])
            acc |= set(F.lumps[i])
            i += 1
        while len(group) > 1:
            k = 0 if rng is None else rng.randrange(len(group) - 1)
            group[k : k + 2] = [inst.mul(group[k], group[k + 1])]
        out.append(group[0])
    return tuple(out)


def _split(inst, e, lumps, rng):
    if len(lumps) == 1:
        return [e]
    cut = 1 if rng is None else rng.randrange(1, len(lumps))
    S = tuple(x for l in lumps[:cut] for x in l)
    T = tuple(x for l in lumps[cut:] for x in l)
    eS, eT = inst.comul(e, S, T)
    return _split(inst, eS, lumps[:cut], rng) + _split(inst, eT, lumps[cut:], rng)


def lift_comul(inst, F: Composition, G: Composition, elems, rng=None):
    """Split a tuple over the lumps of a coarsening G up to a tuple over the
    lumps of F, by iterated binary comultiplication.

    rng=None peels leftmost lumps; a generator picks random cut points.
    """
    if not refines(G, F):
        raise ValueError("G must be a coarsening of F")
    if len(elems) != G.length():
        raise ValueError("one element per lump of G required")
    out = []
    i = 0
    for e, T in zip(elems, G.lumps):
        if inst.ground_of(e) != GroundSet.of(T):
            raise ValueError("element over the wrong ground set")
        lumps = []
        acc: set = set()
        while acc != set(T):
            lumps.append(F.lumps[i])
            acc |= set(F.lumps[i])
            i += 1
        out.extend(_split(inst, e, lumps, rng))
    return tuple(out)


# ---------------------------------------------------------------------------
# single-case law predicates


def tuples_equal(inst, xs, ys) -> bool:
    """Tuple equality in the pointed sense: for pointed instances the target
    of an iterated comultiplication is a smash product, where every tuple
    with a zero coordinate is THE basepoint. Plain equality otherwise."""
    xs, ys = tuple(xs), tuple(ys)
    if inst.pointed and inst.is_zero is not None:
        zx = any(inst.is_zero(e) for e in xs)
        zy = any(inst.is_zero(e) for e in ys)
        if zx or zy:
            return zx and zy
    return xs == ys


def mul_naturality_holds(inst, sigma: Bijection, a, b) -> bool:
    ga, gb = inst.ground_of(a), inst.ground_of(b)
    lhs = inst.relabel(sigma, inst.mul(a, b))
    rhs = inst.mul(
        inst.relabel(sigma.restricted(ga.labels), a),
        inst.relabel(sigma.restricted(gb.labels), b),
    )
    return lhs == rhs


def comul_naturality_holds(inst, sigma: Bijection, x, S_src, T_src) -> bool:
    S_img = tuple(sigma(s) for s in S_src)
    T_img = tuple(sigma(t) for t in T_src)
    lhs = inst.comul(inst.relabel(sigma, x), S_src, T_src)
    xS, xT = inst.comul(x, S_img, T_img)
    rhs = (
        inst.relabel(sigma.restricted(S_img), xS),
        inst.relabel(sigma.restricted(T_img), xT),
    )
    return tuples_equal(inst, lhs, rhs)


def associativity_holds(inst, a, b, c) -> bool:
    return inst.mul(inst.mul(a, b), c) == inst.mul(a, inst.mul(b, c))


def coassociativity_holds(inst, x, A, B, C) -> bool:
    u, vw = inst.comul(x, A, tuple(B) + tuple(C))
    v, w = inst.comul(vw, B, C)
    uv, w2 = inst.comul(x, tuple(A) + tuple(B), C)
    u2, v2 = inst.comul(uv, A, B)
    return tuples_equal(inst, (u, v, w), (u2, v2, w2))


def square_holds(inst, a, b, S, T, U, V) -> bool:
    """Split a product along the regrouped decomposition versus multiplying
    the splits: a lives over S ⊔ T, b over U ⊔ V."""
    lhs = inst.comul(inst.mul(a, b), tuple(S) + tuple(U), tuple(T) + tuple(V))
    a1, a2 = inst.comul(a, S, T)
    b1, b2 = inst.comul(b, U, V)
    rhs = (inst.mul(a1, b1), inst.mul(a2, b2))
    return tuples_equal(inst, lhs, rhs)


def zero_absorption_holds(inst, y, S_zero) -> bool:
    """The distinguished zero over S_zero absorbs multiplication and splits
    into zeros."""
    gS = GroundSet.of(S_zero)
    gy = inst.ground_of(y)
    zero = inst.zero_of(gS)
    prod = inst.mul(zero, y)
    union = GroundSet.of(gS.labels + gy.labels)
    if prod != inst.zero_of(union):
        return False
    zz = inst.comul(inst.zero_of(union), gS.labels, gy.labels)
    return tuple(zz) == (inst.zero_of(gS), inst.zero_of(gy))


def _matching_perm(source: Composition, target: Composition) -> Perm:
    """The permutation sending each lump of source to its position in target;
    both must have the same lump multiset."""
    return Perm(tuple(target.lumps.index(L) + 1 for L in source.lumps))


def _permute_tuple(beta: Perm, elems) -> tuple:
    out = [None] * len(elems)
    for m, e in enumerate(elems, start=1):
        out[beta(m) - 1] = e
    return tuple(out)


def general_square_holds(inst, F: Composition, G: Composition, elems) -> bool:
    """Multiply along F then split along G, versus split along FG, reorder
    the pieces to GF, and multiply along G."""
    one = Composition.one_lump(F.ground)
    lhs = lift_comul(inst, G, one, lift_mul(inst, F, one, elems))
    FG = tits_product(F, G)
    GF = tits_product(G, F)
    pieces = lift_comul(inst, FG, F, elems)
    beta = _matching_perm(FG, GF)
    rhs = lift_mul(inst, GF, G, _permute_tuple(beta, pieces))
    return tuples_equal(inst, lhs, rhs)


def perm_naturality_mul_holds(inst, F, G, beta: Perm, elems) -> bool:
    """Permuting lumps before and after the lifted multiplication agree."""
    G_t = permute_lumps(beta, G)
    beta_hat = hat_beta(beta, F, G)
    F_t = permute_lumps(beta_hat, F)
    lhs = lift_mul(inst, F_t, G_t, _permute_tuple(beta_hat, elems))
    rhs = _permute_tuple(beta, lift_mul(inst, F, G, elems))
    return tuples_equal(inst, lhs, rhs)


def perm_naturality_comul_holds(inst, F, G, beta: Perm, elems) -> bool:
    G_t = permute_lumps(beta, G)
    beta_hat = hat_beta(beta, F, G)
    F_t = permute_lumps(beta_hat, F)
    lhs = lift_comul(inst, F_t, G_t, _permute_tuple(beta, elems))
    rhs = _permute_tuple(beta_hat, lift_comul(inst, F, G, elems))
    return tuples_equal(inst, lhs, rhs)


def merge_independence_mul_holds(inst, F, G, elems, rng) -> bool:
    return tuples_equal(
        inst, lift_mul(inst, F, G, elems), lift_mul(inst, F, G, elems, rng)
    )


def merge_independence_comul_holds(inst, F, G, elems, rng) -> bool:
    return tuples_equal(
        inst, lift_comul(inst, F, G, elems), lift_comul(inst, F, G, elems, rng)
    )


# ---------------------------------------------------------------------------
# case sampling


def _random_blocks(ground: GroundSet, parts: int, rng) -> list[tuple]:
    blocks: list[list] = [[] for _ in range(parts)]
    for x in ground.labels:
        blocks[rng.randrange(parts)].append(x)
    return [tuple(b) for b in blocks]


def _random_composition(ground: GroundSet, rng) -> Composition:
    return rng.choice(_comps(ground))


def _random_coarsening(F: Composition, rng) -> Composition:
    if F.length() <= 1:
        return F
    lumps = []
    cur: list = []
    for i, l in enumerate(F.lumps):
        cur.extend(l)
        if i == F.length() - 1 or rng.random() < 0.5:
            lumps.append(sorted_labels(cur))
            cur = []
    return Composition(F.ground, tuple(lumps))


def _random_bijection(ground: GroundSet, rng) -> Bijection:
    images = list(ground.labels)
    rng.shuffle(images)
    return Bijection(ground, ground, tuple(zip(ground.labels, images)))


def _all_bijections(ground: GroundSet):
    for images in itertools.permutations(ground.labels):
        yield Bijection(ground, ground, tuple(zip(ground.labels, images)))


def _one(inst, labels, rng):
    return inst.elements(GroundSet.of(labels), rng, 1)[0]


def _tuple_over(inst, F: Composition, rng) -> tuple:
    return tuple(_one(inst, lump, rng) for lump in F.lumps)


# ---------------------------------------------------------------------------
# budgeted / exhaustive drivers


def _report(law: str, cases) -> LawReport:
    checked = 0
    try:
        for ok, payload in cases:
            checked += 1
            if not ok:
                return LawReport(law, checked, False, payload())
    except Exception as exc:  # broken instances may violate ground contracts
        return LawReport(law, checked + 1, False, f"error: {exc}")
    return LawReport(law, checked, True)


def check_all(
    inst: BimonoidInstance,
    ground: GroundSet,
    seed: int = 0,
    budget: int = 200,
    exhaustive: bool = False,
) -> list[LawReport]:
    """Run every law; exhaustive mode iterates all decompositions and all
    elements for enumerable instances, otherwise cases are sampled."""
    rng = random.Random(seed)
    full = exhaustive and inst.enumerable
    big = 10**9

    def elems_on(labels):
        g = GroundSet.of(labels)
        return inst.elements(g, rng, big if full else max(1, budget // 8))

    reports = []

    def mul_nat_cases():
        if full:
            for S, T in two_block_decompositions(ground):
                for a in elems_on(S):
                    for b in elems_on(T):
                        for sig in _all_bijections(ground):
                            yield (
                                mul_naturality_holds(inst, sig, a, b),
                                lambda a=a, b=b, sig=sig: f"sigma={sig!r} a={a!r} b={b!r}",
                            )
        else:
            for _ in range(budget):
                S, T = _random_blocks(ground, 2, rng)
                a, b = _one(inst, S, rng), _one(inst, T, rng)
                sig = _random_bijection(ground, rng)
                yield (
                    mul_naturality_holds(inst, sig, a, b),
                    lambda a=a, b=b, sig=sig: f"sigma={sig!r} a={a!r} b={b!r}",
                )

    reports.append(_report("mul-naturality", mul_nat_cases()))

    def comul_nat_cases():
        if full:
            for x in elems_on(ground.labels):
                for S, T in two_block_decompositions(ground):
                    for sig in _all_bijections(ground):
                        yield (
                            comul_naturality_holds(inst, sig, x, S, T),
                            lambda x=x, S=S, sig=sig: f"sigma={sig!r} x={x!r} S={S!r}",
                        )
        else:
            for _ in range(budget):
                x = _one(inst, ground.labels, rng)
                S, T = _random_blocks(ground, 2, rng)
                sig = _random_bijection(ground, rng)
                yield (
                    comul_naturality_holds(inst, sig, x, S, T),
                    lambda x=x, S=S, sig=sig: f"sigma={sig!r} x={x!r} S={S!r}",
                )

    reports.append(_report("comul-naturality", comul_nat_cases()))

    def assoc_cases():
        if full:
            for A, B, C in ordered_decompositions(ground, 3):
                for a in elems_on(A):
                    for b in elems_on(B):
                        for c in elems_on(C):
                            yield (
                                associativity_holds(inst, a, b, c),
                                lambda a=a, b=b, c=c: f"a={a!r} b={b!r} c={c!r}",
                            )
        else:
            for _ in range(budget):
                A, B, C = _random_blocks(ground, 3, rng)
                a, b, c = _one(inst, A, rng), _one(inst, B, rng), _one(inst, C, rng)
                yield (
                    associativity_holds(inst, a, b, c),
                    lambda a=a, b=b, c=c: f"a={a!r} b={b!r} c={c!r}",
                )

    reports.append(_report("associativity", assoc_cases()))

    def coassoc_cases():
        if full:
            for x in elems_on(ground.labels):
                for A, B, C in ordered_decompositions(ground, 3):
                    yield (
                        coassociativity_holds(inst, x, A, B, C),
                        lambda x=x, A=A, B=B: f"x={x!r} A={A!r} B={B!r}",
                    )
        else:
            for _ in range(budget):
                x = _one(inst, ground.labels, rng)
                A, B, C = _random_blocks(ground, 3, rng)
                yield (
                    coassociativity_holds(inst, x, A, B, C),
                    lambda x=x, A=A, B=B: f"x={x!r} A={A!r} B={B!r}",
                )

    reports.append(_report("coassociativity", coassoc_cases()))

    def square_cases():
        if full:
            for S, T, U, V in ordered_decompositions(ground, 4):
                for a in elems_on(tuple(S) + tuple(T)):
                    for b in elems_on(tuple(U) + tuple(V)):
                        yield (
                            square_holds(inst, a, b, S, T, U, V),
                            lambda a=a, b=b, S=S, T=T, U=U: f"a={a!r} b={b!r} S={S!r} T={T!r} U={U!r}",
                        )
        else:
            for _ in range(budget):
                S, T, U, V = _random_blocks(ground, 4, rng)
                a = _one(inst, tuple(S) + tuple(T), rng)
                b = _one(inst, tuple(U) + tuple(V), rng)
                yield (
                    square_holds(inst, a, b, S, T, U, V),
                    lambda a=a, b=b, S=S, T=T, U=U: f"a={a!r} b={b!r} S={S!r} T={T!r} U={U!r}",
                )

    reports.append(_report("square", square_cases()))

    def general_square_cases():
        pairs = (
            ((F, G) for F in _comps(ground) for G in _comps(ground))
            if full
            else (
                (_random_composition(ground, rng), _random_composition(ground, rng))
                for _ in range(budget)
            )
        )
        for F, G in pairs:
            elems = _tuple_over(inst, F, rng)
            yield (
                general_square_holds(inst, F, G, elems),
                lambda F=F, G=G, elems=elems: f"F={F!r} G={G!r} elems={elems!r}",
            )

    reports.append(_report("general-square", general_square_cases()))

    def perm_nat_cases(pred, lift_over_G: bool):
        for _ in range(budget):
            F = _random_composition(ground, rng)
            G = _random_coarsening(F, rng)
            images = list(range(1, G.length() + 1))
            rng.shuffle(images)
            beta = Perm(tuple(images))
            elems = _tuple_over(inst, G if lift_over_G else F, rng)
            yield (
                pred(inst, F, G, beta, elems),
                lambda F=F, G=G, beta=beta, elems=elems: f"F={F!r} G={G!r} beta={beta!r} elems={elems!r}",
            )

    reports.append(
        _report("perm-naturality-mul", perm_nat_cases(perm_naturality_mul_holds, False))
    )
    reports.append(
        _report(
            "perm-naturality-comul", perm_nat_cases(perm_naturality_comul_holds, True)
        )
    )

    def merge_cases(pred, lift_over_G: bool):
        for _ in range(budget):
            F = _random_composition(ground, rng)
            G = _random_coarsening(F, rng)
            elems = _tuple_over(inst, G if lift_over_G else F, rng)
            yield (
                pred(inst, F, G, elems, rng),
                lambda F=F, G=G, elems=elems: f"F={F!r} G={G!r} elems={elems!r}",
            )

    reports.append(
        _report(
            "merge-independence-mul", merge_cases(merge_independence_mul_holds, False)
        )
    )
    reports.append(
        _report(
            "merge-independence-comul",
            merge_cases(merge_independence_comul_holds, True),
        )
    )

    if inst.pointed:

        def zero_cases():
            for _ in range(budget):
                S, T = _random_blocks(ground, 2, rng)
                y = _one(inst, T, rng)
                yield (
                    zero_absorption_holds(inst, y, S),
                    lambda y=y, S=S: f"y={y!r} S={S!r}",
                )

        reports.append(_report("zero-absorption", zero_cases()))

    return reports


# ---------------------------------------------------------------------------
# instances


def _enumerable_elements(population_fn):
    def elements(ground, rng, budget):
        full = list(population_fn(ground))
        if len(full) <= budget:
            return full
        return rng.sample(full, budget)

    return elements


def sigma_instance() -> BimonoidInstance:
    return BimonoidInstance(
        name="sigma",
        pointed=False,
        enumerable=True,
        elements=_enumerable_elements(lambda g: _comps(g)),
        mul=concatenate,
        comul=lambda F, S, T: (restrict(F, S), restrict(F, T)),
        relabel=relabel,
        ground_of=lambda F: F.ground,
    )


def o_bullet_instance() -> BimonoidInstance:
    return BimonoidInstance(
        name="o-bullet",
        pointed=True,
        enumerable=True,
        elements=_enumerable_elements(lambda g: enumerate_aug_preposets(g)),
        mul=o_mul,
        comul=o_comul,
        relabel=relabel_preposet,
        ground_of=lambda p: p.ground,
        zero_of=Bottom,
        is_zero=is_bottom,
    )


def _random_bf(ground: GroundSet, rng) -> BooleanFunction:
    n = len(ground)
    vals = [0] + [rng.randint(-4, 4) for _ in range((1 << n) - 1)]
    return BooleanFunction(ground, tuple(vals))


def bf_instance() -> BimonoidInstance:
    def elements(ground, rng, budget):
        return [_random_bf(ground, rng) for _ in range(budget)]

    return BimonoidInstance(
        name="bf",
        pointed=False,
        enumerable=False,
        elements=elements,
        mul=bf_mul,
        comul=bf_comul,
        relabel=relabel_bf,
        ground_of=lambda z: z.ground,
    )


def random_point(ground: GroundSet, rng) -> PermPoint:
    orbit = _random_composition(ground, rng)
    coords = {
        x: Fraction(rng.choice([1, -1]) * rng.randint(1, 5), rng.randint(1, 5))
        for x in ground.labels
    }
    return PermPoint.of(orbit, coords)


def points_instance() -> BimonoidInstance:
    def elements(ground, rng, budget):
        return [random_point(ground, rng) for _ in range(budget)]

    return BimonoidInstance(
        name="points",
        pointed=False,
        enumerable=False,
        elements=elements,
        mul=point_mul,
        comul=point_comul,
        relabel=point_relabel,
        ground_of=lambda x: x.ground,
    )


INSTANCES: dict[str, Callable[[], BimonoidInstance]] = {
    "sigma": sigma_instance,
    "o-bullet": o_bullet_instance,
    "bf": bf_instance,
    "points": points_instance,
}
