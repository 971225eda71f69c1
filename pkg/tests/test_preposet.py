"""Preposets stored as transitive pair relations, the augmented family with
its absorbing bottom, and the product/coproduct pair."""
import pytest

from permutokit.preposet import (
    Bottom,
    Preposet,
    composition_of_total,
    enumerate_aug_preposets,
    enumerate_preposets,
    is_bottom,
    is_total,
    o_comul,
    o_mul,
    preposet_leq,
    relabel_preposet,
    restrict_preposet,
    split_admissible,
    total_of_composition,
    upward_pairs,
)
from permutokit.setcomp import Bijection, Composition, GroundSet


def pre(ground, *pairs):
    return Preposet.from_pairs(GroundSet.of(ground), list(pairs))


class TestPreposet:
    def test_transitivity_enforced(self):
        with pytest.raises(ValueError):
            Preposet.from_pairs(GroundSet.of([1, 2, 3]), [(1, 2), (2, 3)])

    def test_from_pairs_accepts_closed_relation(self):
        p = pre([1, 2, 3], (1, 2), (2, 3), (1, 3))
        assert p.has(1, 3)

    def test_antichain_has_no_pairs(self):
        assert Preposet.antichain(GroundSet.of([1, 2])).pairs == frozenset()

    def test_complete_relates_everything(self):
        p = Preposet.complete(GroundSet.of([1, 2]))
        assert set(p.pairs) == {(1, 2), (2, 1)}

    def test_pairs_exclude_diagonal(self):
        p = pre([1, 2], (1, 2))
        assert (1, 1) not in p.pairs


class TestOrder:
    def test_antichain_is_top(self):
        ground = GroundSet.of([1, 2, 3])
        top = Preposet.antichain(ground)
        for p in enumerate_preposets(ground):
            assert preposet_leq(p, top)

    def test_bottom_below_everything(self):
        ground = GroundSet.of([1, 2])
        b = Bottom(ground)
        for p in enumerate_aug_preposets(ground):
            assert preposet_leq(b, p)
        assert not preposet_leq(Preposet.antichain(ground), b)

    def test_more_pairs_is_smaller(self):
        # q <= p iff q's relation contains p's
        p = pre([1, 2], (1, 2))
        q = Preposet.complete(GroundSet.of([1, 2]))
        assert preposet_leq(q, p)
        assert not preposet_leq(p, q)


class TestTotal:
    def test_total_of_composition_same_lump_both_directions(self):
        t = total_of_composition(Composition.of([[1, 2], [3]]))
        assert t.has(1, 2) and t.has(2, 1)
        assert t.has(1, 3) and not t.has(3, 1)

    def test_roundtrip_all_compositions(self):
        from permutokit.setcomp import all_compositions

        ground = GroundSet.of([1, 2, 3, 4])
        for F in all_compositions(ground):
            t = total_of_composition(F)
            assert is_total(t)
            assert composition_of_total(t) == F

    def test_composition_of_non_total_rejected(self):
        with pytest.raises(ValueError):
            composition_of_total(pre([1, 2, 3], (1, 2)))

    def test_refinement_mirrors_preposet_order(self):
        # G <= F as compositions iff total(F) <= total(G) flips: coarsening
        # keeps all comparabilities of the coarser one
        from permutokit.setcomp import all_compositions, refines

        ground = GroundSet.of([1, 2, 3])
        for F in all_compositions(ground):
            for G in all_compositions(ground):
                lhs = refines(G, F)
                rhs = preposet_leq(total_of_composition(G), total_of_composition(F))
                # merging CONTIGUOUS lumps only: composition refinement is
                # strictly finer-grained than relation containment
                if lhs:
                    assert rhs
        # and containment without contiguity really happens
        assert preposet_leq(
            total_of_composition(Composition.of([[1, 3], [2]])),
            total_of_composition(Composition.of([[1], [3], [2]])),
        )


class TestRestrictRelabel:
    def test_restrict(self):
        p = pre([1, 2, 3], (1, 2), (2, 3), (1, 3))
        q = restrict_preposet(p, [1, 3])
        assert set(q.pairs) == {(1, 3)}

    def test_relabel_pullback(self):
        sigma = Bijection.of({"a": 1, "b": 2})
        p = pre([1, 2], (1, 2))
        q = relabel_preposet(sigma, p)
        assert set(q.pairs) == {("a", "b")}

    def test_relabel_bottom(self):
        sigma = Bijection.of({"a": 1})
        assert is_bottom(relabel_preposet(sigma, Bottom(GroundSet.of([1]))))


class TestMulComul:
    def test_mul_is_disjoint_union(self):
        p = pre([1, 2], (1, 2))
        q = pre([3], )
        out = o_mul(p, q)
        assert set(out.pairs) == {(1, 2)}
        assert out.ground.labels == (1, 2, 3)

    def test_mul_bottom_absorbs(self):
        p = pre([1], )
        assert is_bottom(o_mul(p, Bottom(GroundSet.of([2]))))
        assert is_bottom(o_mul(Bottom(GroundSet.of([2])), p))

    def test_mul_overlap_rejected(self):
        with pytest.raises(ValueError):
            o_mul(pre([1, 2], (1, 2)), pre([2], ))

    def test_admissible_split_restricts(self):
        p = pre([1, 2, 3], (1, 2), (1, 3))
        # (S,T) = ({1,2},{3}): no pair points from {3} back into {1,2}
        assert split_admissible(p, [1, 2], [3])
        pS, pT = o_comul(p, [1, 2], [3])
        assert set(pS.pairs) == {(1, 2)}
        assert pT.pairs == frozenset()

    def test_inadmissible_split_gives_bottoms(self):
        p = pre([1, 2], (2, 1))
        assert not split_admissible(p, [1], [2])
        pS, pT = o_comul(p, [1], [2])
        assert is_bottom(pS) and is_bottom(pT)

    def test_comul_of_bottom(self):
        pS, pT = o_comul(Bottom(GroundSet.of([1, 2])), [1], [2])
        assert is_bottom(pS) and is_bottom(pT)

    def test_empty_block_split(self):
        p = pre([1, 2], (1, 2))
        pS, pT = o_comul(p, [1, 2], [])
        assert pS == p
        assert pT.ground.labels == ()

    def test_mul_then_comul_recovers_factors(self):
        ground1, ground2 = GroundSet.of([1, 2]), GroundSet.of([3])
        for p in enumerate_preposets(ground1):
            for q in enumerate_preposets(ground2):
                back = o_comul(o_mul(p, q), [1, 2], [3])
                assert back == (p, q)


class TestUpwardPairs:
    def test_antichain_has_all_proper_splits(self):
        ground = GroundSet.of([1, 2, 3])
        assert len(upward_pairs(Preposet.antichain(ground))) == 6

    def test_blocked_by_reverse_pair(self):
        p = pre([1, 2], (2, 1))
        # ({1},{2}) needs no pair 2 -> 1 pointing from T into S; here it exists
        assert ((1,), (2,)) not in upward_pairs(p)
        assert ((2,), (1,)) in upward_pairs(p)

    def test_total_preposet_upward_pairs_are_initial_segments(self):
        t = total_of_composition(Composition.of([[1], [2], [3]]))
        assert set(upward_pairs(t)) == {((1,), (2, 3)), ((1, 2), (3,))}


class TestEnumeration:
    def test_counts(self):
        # preposets = pairs (partition into lumps, partial order on lumps)
        for n, expect in [(0, 1), (1, 1), (2, 4), (3, 29), (4, 355)]:
            ground = GroundSet.of(range(1, n + 1))
            ps = list(enumerate_preposets(ground))
            assert len(ps) == expect
            assert len(set(ps)) == expect

    def test_augmented_prepends_bottom(self):
        ground = GroundSet.of([1, 2])
        aug = list(enumerate_aug_preposets(ground))
        assert is_bottom(aug[0])
        assert len(aug) == 5

    def test_cap(self):
        with pytest.raises(ValueError):
            list(enumerate_preposets(GroundSet.of(range(6))))
