"""Torus-orbit points: concatenation, forget-and-stabilize, exact monomial
evaluation with the cross-lump vanishing rule, and relabeling."""
import random
from fractions import Fraction

import pytest

from permutokit.cones import CoweightVector, coroot
from permutokit.points import PermPoint, evaluate, point_comul, point_mul, point_relabel
from permutokit.sections import co_mul
from permutokit.setcomp import (
    Bijection,
    Composition,
    GroundSet,
    all_compositions,
    concatenate,
    refines,
    restrict,
)
from permutokit.preposet import total_of_composition
from permutokit.cones import cone_lattice_points, Box, cone_restrict


def ppt(lumps, mapping):
    return PermPoint.of(Composition.of(lumps), {k: Fraction(v) for k, v in mapping.items()})


def _random_point(rng, labels):
    ground = GroundSet.of(labels)
    comps = list(all_compositions(ground))
    orbit = rng.choice(comps)
    coords = {
        x: Fraction(rng.choice([1, -1]) * rng.randint(1, 5), rng.randint(1, 5))
        for x in labels
    }
    return PermPoint.of(orbit, coords)


class TestPermPoint:
    def test_normalization(self):
        x = ppt([[1, 2]], {1: Fraction(3), 2: Fraction(6)})
        assert x.coords == (1, 2)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            ppt([[1, 2]], {1: 1, 2: 0})

    def test_least_label_must_be_one(self):
        with pytest.raises(ValueError):
            PermPoint(Composition.of([[1, 2]]), (Fraction(2), Fraction(1)))

    def test_single_lump_scaling_quotient(self):
        x = ppt([[1, 2, 3]], {1: 2, 2: 4, 3: 1})
        y = ppt([[1, 2, 3]], {1: 10, 2: 20, 3: 5})
        assert x == y


class TestMul:
    def test_singletons(self):
        x = point_mul(ppt([[1]], {1: 7}), ppt([[2]], {2: 9}))
        assert x.orbit == Composition.of([[1], [2]])
        assert x.coords == (1, 1)

    def test_worked_example(self):
        q = Fraction(5, 3)
        x1 = ppt([[1, 2]], {1: 1, 2: q})
        x2 = ppt([[3]], {3: 1})
        x = point_mul(x1, x2)
        assert x.orbit == Composition.of([[1, 2], [3]])
        assert x.coords == (1, q, 1)

    def test_orbit_additivity(self):
        rng = random.Random(41)
        for _ in range(30):
            x1 = _random_point(rng, [1, 3])
            x2 = _random_point(rng, [2, 4])
            assert point_mul(x1, x2).orbit == concatenate(x1.orbit, x2.orbit)

    def test_overlap_rejected(self):
        x = ppt([[1]], {1: 1})
        with pytest.raises(ValueError):
            point_mul(x, x)

    def test_fixed_orbit_bijectivity(self):
        # with both orbits fixed, the product map is injective and every
        # point of the concatenated orbit splits back
        rng = random.Random(42)
        seen = {}
        for _ in range(60):
            x1 = _random_point(rng, [1, 2])
            x2 = _random_point(rng, [3, 4])
            y = point_mul(x1, x2)
            key = (x1.orbit, x2.orbit, y.coords)
            if key in seen:
                assert seen[key] == (x1, x2)
            seen[key] = (x1, x2)
            back1, back2 = point_comul(y, [1, 2], [3, 4])
            assert (back1, back2) == (x1, x2)


class TestComul:
    def test_two_singleton_split(self):
        x = ppt([[1, 2]], {1: 1, 2: Fraction(7, 2)})
        a, b = point_comul(x, [1], [2])
        assert a == ppt([[1]], {1: 1})
        assert b == ppt([[2]], {2: 1})

    def test_renormalization_example(self):
        q = Fraction(5, 3)
        x = ppt([[1, 2], [3]], {1: 1, 2: q, 3: 1})
        a, b = point_comul(x, [2, 3], [1])
        assert a.orbit == Composition.of([[2], [3]])
        assert a.coords == (1, 1)
        assert b == ppt([[1]], {1: 1})

    def test_bad_decomposition(self):
        x = ppt([[1, 2]], {1: 1, 2: 2})
        with pytest.raises(ValueError):
            point_comul(x, [1], [1, 2])

    def test_orbits_restrict(self):
        rng = random.Random(43)
        for _ in range(30):
            x = _random_point(rng, [1, 2, 3, 4])
            a, b = point_comul(x, [2, 4], [1, 3])
            assert a.orbit == restrict(x.orbit, [2, 4])
            assert b.orbit == restrict(x.orbit, [1, 3])

    def test_surjectivity_preimage(self):
        # any target pair lifts: assemble coords on the concatenated orbit,
        # cross-lump ratios free, then forget back
        rng = random.Random(44)
        for _ in range(30):
            a = _random_point(rng, [1, 3])
            b = _random_point(rng, [2, 5])
            lift = point_mul(a, b)
            back_a, back_b = point_comul(lift, [1, 3], [2, 5])
            assert (back_a, back_b) == (a, b)


class TestEvaluate:
    def test_zero_exponent(self):
        x = ppt([[1, 2]], {1: 1, 2: 3})
        H = Composition.one_lump(GroundSet.of([1, 2]))
        assert evaluate(x, H, CoweightVector.zero(x.ground)) == 1

    def test_worked_example(self):
        q = Fraction(5, 3)
        x = ppt([[1, 2]], {1: 1, 2: q})
        H = Composition.one_lump(GroundSet.of([1, 2]))
        assert evaluate(x, H, coroot(1, 2, x.ground)) == 1 / q

    def test_cross_lump_vanishing(self):
        x = ppt([[1], [2]], {1: 1, 2: 1})
        H = Composition.of([[1], [2]])
        h = coroot(2, 1, x.ground)
        assert evaluate(x, H, h) == 0

    def test_outside_chart_rejected(self):
        x = ppt([[2], [1]], {1: 1, 2: 1})
        with pytest.raises(ValueError):
            evaluate(x, Composition.of([[1], [2]]), CoweightVector.zero(x.ground))

    def test_one_lump_orbit_lies_in_every_chart(self):
        x = ppt([[1, 2]], {1: 1, 2: 2})
        assert evaluate(x, Composition.of([[1], [2]]), CoweightVector.zero(x.ground)) == 1

    def test_exponent_outside_cone_rejected(self):
        x = ppt([[1], [2]], {1: 1, 2: 1})
        H = Composition.of([[1], [2]])
        with pytest.raises(ValueError):
            evaluate(x, H, coroot(1, 2, x.ground))

    def test_scaling_invariance(self):
        # same quotient point built from different raw scalars evaluates
        # identically because exponents sum to zero per lump
        H = Composition.one_lump(GroundSet.of([1, 2, 3]))
        h = CoweightVector(H.ground, (2, -1, -1))
        x = ppt([[1, 2, 3]], {1: 2, 2: 3, 3: 4})
        y = ppt([[1, 2, 3]], {1: 4, 2: 6, 3: 8})
        assert x == y
        assert evaluate(x, H, h) == Fraction(4, 12)


class TestRelabel:
    def test_identity(self):
        x = ppt([[1, 2], [3]], {1: 1, 2: 2, 3: 1})
        assert point_relabel(Bijection.identity(x.ground), x) == x

    def test_composite(self):
        x = ppt([[1, 2]], {1: 1, 2: 5})
        sigma = Bijection.of({"a": 1, "b": 2})
        tau = Bijection.of({10: "a", 20: "b"})
        once = point_relabel(tau, point_relabel(sigma, x))
        composite = Bijection.of({10: 1, 20: 2})
        assert once == point_relabel(composite, x)

    def test_mismatch(self):
        x = ppt([[1]], {1: 1})
        with pytest.raises(ValueError):
            point_relabel(Bijection.of({"a": 2}), x)

    def test_relabel_then_evaluate(self):
        rng = random.Random(45)
        for _ in range(30):
            x = _random_point(rng, [1, 2, 3])
            sigma = Bijection.of({"a": 1, "b": 2, "c": 3})
            y = point_relabel(sigma, x)
            H = x.orbit
            K = relabel_comp(sigma, H)
            for h in cone_lattice_points(total_of_composition(H), Box(2)):
                moved = CoweightVector(
                    K.ground, tuple(h.coord(sigma(a)) for a in K.ground.labels)
                )
                assert evaluate(y, K, moved) == evaluate(x, H, h)


class TestDualityWithSections:
    def test_split_evaluations_multiply(self):
        # evaluating the juxtaposed exponent at x itself, in the ambient
        # chart, equals the product of the component evaluations at the
        # forgetful halves
        rng = random.Random(46)
        ground = GroundSet.of([1, 2, 3])
        for H in all_compositions(ground):
            for orbit in all_compositions(ground):
                if not refines(orbit, H):
                    continue
                for _ in range(5):
                    coords = {
                        x: Fraction(rng.choice([1, -1]) * rng.randint(1, 4), rng.randint(1, 4))
                        for x in ground.labels
                    }
                    x = PermPoint.of(orbit, coords)
                    for S, T in (((1, 2), (3,)), ((2,), (1, 3)), ((3,), (1, 2))):
                        HS, HT = restrict(H, S), restrict(H, T)
                        pS = total_of_composition(HS)
                        pT = total_of_composition(HT)
                        xS, xT = point_comul(x, S, T)
                        for h1 in cone_lattice_points(pS, Box(1)):
                            for h2 in cone_lattice_points(pT, Box(1)):
                                joint = co_mul(h1, pS, h2, pT)
                                lhs = evaluate(x, H, joint)
                                rhs = evaluate(xS, HS, h1) * evaluate(xT, HT, h2)
                                assert lhs == rhs


class TestChartRefinement:
    def test_evaluation_agrees_across_charts(self):
        # an exponent visible in a finer chart evaluates identically in any
        # coarser chart containing the orbit
        rng = random.Random(47)
        ground = GroundSet.of([1, 2, 3])
        for H in all_compositions(ground):
            for Hmid in all_compositions(ground):
                if not refines(Hmid, H):
                    continue
                for orbit in all_compositions(ground):
                    if not refines(orbit, Hmid):
                        continue
                    coords = {
                        x: Fraction(rng.choice([1, -1]) * rng.randint(1, 4), rng.randint(1, 4))
                        for x in ground.labels
                    }
                    x = PermPoint.of(orbit, coords)
                    for h in cone_lattice_points(total_of_composition(H), Box(1)):
                        assert evaluate(x, H, h) == evaluate(x, Hmid, h)


def relabel_comp(sigma, H):
    from permutokit.setcomp import relabel

    return relabel(sigma, H)
