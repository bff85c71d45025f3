"""Tests for weight-chamber combinatorics."""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fmchow.errors import SizeCapError, WalkOrderError
from fmchow.setcomb import (
    LargeFamily,
    Weights,
    all_walks,
    canonical_walk,
    is_overlap,
    merge_family,
    validate_walk,
)

F = frozenset


def family(n, *sets):
    return LargeFamily(n, frozenset(F(s) for s in sets))


rational_weight = st.builds(
    lambda p, q: Fraction(p, q), st.integers(0, 6), st.integers(1, 6)
).filter(lambda f: f <= 1)
weight_vectors = st.lists(rational_weight, min_size=1, max_size=5).map(
    lambda vals: Weights(tuple(vals))
)


class TestOverlap:
    def test_proper_intersection(self):
        assert is_overlap({1, 2}, {2, 3})

    def test_containment_is_not_overlap(self):
        assert not is_overlap({1, 2}, {1, 2, 3})
        assert not is_overlap({1, 2, 3}, {1, 2})
        assert not is_overlap({1, 2}, {1, 2})

    def test_disjoint_is_not_overlap(self):
        assert not is_overlap({1, 2}, {3, 4})

    @given(
        st.sets(st.integers(1, 6), min_size=1),
        st.sets(st.integers(1, 6), min_size=1),
    )
    def test_symmetric(self, s, t):
        assert is_overlap(s, t) == is_overlap(t, s)


class TestWeights:
    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Weights((Fraction(3, 2), 1))
        with pytest.raises(ValueError):
            Weights((Fraction(-1, 2),))

    def test_from_strings(self):
        w = Weights.from_strings(["1", "1/2", "0"])
        assert w.values == (1, Fraction(1, 2), 0)

    def test_all_ones(self):
        assert Weights((1, 1)).is_all_ones()
        assert not Weights((1, Fraction(1, 2))).is_all_ones()


class TestLargeFromWeights:
    def test_all_ones(self):
        fam = LargeFamily.from_weights(Weights((1, 1, 1)))
        assert fam.members == family(3, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}).members

    def test_on_the_wall_is_small(self):
        # {2,3} sums to exactly 1, so it stays small
        fam = LargeFamily.from_weights(Weights((1, Fraction(1, 2), Fraction(1, 2))))
        assert fam.members == family(3, {1, 2}, {1, 3}, {1, 2, 3}).members

    def test_zero_weights(self):
        fam = LargeFamily.from_weights(Weights((0, 0, 0, 0)))
        assert fam.members == frozenset()

    @given(weight_vectors)
    @settings(max_examples=60)
    def test_always_upward_closed(self, w):
        # the constructor itself raises if the family is not upward closed
        LargeFamily.from_weights(w)

    @given(weight_vectors, st.randoms(use_true_random=False))
    @settings(max_examples=40)
    def test_permutation_equivariant(self, w, rnd):
        order = list(range(1, w.n + 1))
        rnd.shuffle(order)
        perm = {i + 1: order[i] for i in range(w.n)}
        permuted = Weights(tuple(w.values[order.index(i + 1)] for i in range(w.n)))
        assert LargeFamily.from_weights(permuted).members == LargeFamily.from_weights(
            w
        ).relabel(perm).members


class TestLargeFamily:
    def test_rejects_not_upward_closed(self):
        with pytest.raises(ValueError):
            family(3, {1, 2})

    def test_rejects_singletons(self):
        with pytest.raises(ValueError):
            LargeFamily(2, frozenset({F({1}), F({1, 2})}))

    def test_closure(self):
        fam = LargeFamily.closure(3, [{1, 2}])
        assert fam.members == family(3, {1, 2}, {1, 2, 3}).members

    def test_all_subsets_count(self):
        assert len(LargeFamily.all_subsets(4)) == 11


class TestWalks:
    def test_canonical_order(self):
        fam = family(3, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3})
        assert canonical_walk(fam) == [F({1, 2, 3}), F({1, 2}), F({1, 3}), F({2, 3})]

    def test_canonical_empty(self):
        assert canonical_walk(LargeFamily.empty(3)) == []

    def test_canonical_size_then_lex(self):
        fam = family(4, {1, 2}, {1, 2, 3}, {1, 2, 4}, {1, 2, 3, 4})
        assert canonical_walk(fam) == [
            F({1, 2, 3, 4}),
            F({1, 2, 3}),
            F({1, 2, 4}),
            F({1, 2}),
        ]

    def test_all_walks_forced_order(self):
        assert all_walks([{1, 2, 3}, {1, 2}]) == [[F({1, 2, 3}), F({1, 2})]]

    def test_all_walks_incomparable_commute(self):
        assert len(all_walks([{1, 2}, {3, 4}])) == 2

    def test_all_walks_matches_brute_force(self):
        # independent oracle: filter all permutations for superset-first order
        members = [F({1, 2}), F({1, 3}), F({2, 3}), F({1, 2, 3})]
        brute = [
            list(p)
            for p in permutations(members)
            if all(
                not (p[j] > p[i])
                for i in range(len(p))
                for j in range(i + 1, len(p))
            )
        ]
        walks = all_walks(family(3, *[set(m) for m in members]))
        assert len(brute) == 6
        assert sorted(map(tuple, walks)) == sorted(map(tuple, brute))
        assert all(w[0] == F({1, 2, 3}) for w in walks)

    def test_all_walks_cap(self):
        with pytest.raises(SizeCapError):
            all_walks(LargeFamily.all_subsets(4), cap=8)

    def test_canonical_walk_is_a_walk(self):
        fam = family(3, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3})
        assert canonical_walk(fam) in all_walks(fam)
        validate_walk(fam, canonical_walk(fam))

    def test_validate_rejects_bad_order(self):
        fam = family(3, {1, 2}, {1, 2, 3})
        with pytest.raises(WalkOrderError):
            validate_walk(fam, [F({1, 2}), F({1, 2, 3})])
        with pytest.raises(WalkOrderError):
            validate_walk(fam, [F({1, 2, 3})])


class TestMergeFamily:
    def test_direct_application(self):
        res = merge_family(family(3, {1, 2, 3}), {1, 2})
        assert res.m == 2
        assert res.family.members == frozenset({F({1, 2})})
        assert res.star == 1
        assert res.relabel == {3: 2}

    def test_everything_merged(self):
        res = merge_family(LargeFamily.empty(3), {1, 2, 3})
        assert res.m == 1
        assert res.family.members == frozenset()

    def test_four_points(self):
        res = merge_family(family(4, {1, 2, 3, 4}), {1, 2, 3})
        assert res.m == 2
        assert res.family.members == frozenset({F({1, 2})})

    def test_star_takes_smallest_freed_label(self):
        res = merge_family(family(4, {1, 2, 3, 4}, {2, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}), {2, 4})
        # freed labels {2,4}; star takes 2, survivors 1,3 keep order: 1->1, 3->3->, i.e. {1:1, 3:3}
        assert res.m == 3
        assert res.star == 2
        assert res.relabel == {1: 1, 3: 3}

    def test_rejects_already_large(self):
        with pytest.raises(WalkOrderError):
            merge_family(family(3, {1, 2}, {1, 2, 3}), {1, 2})

    def test_rejects_unprocessed_superset(self):
        with pytest.raises(WalkOrderError):
            merge_family(LargeFamily.empty(3), {1, 2})

    def test_expand_roundtrip(self):
        res = merge_family(family(3, {1, 2, 3}), {1, 2})
        assert res.expand(F({1, 2}), F({1, 2})) == F({1, 2, 3})

    def test_merged_family_validates(self):
        # upward closure of the merged family is checked by its constructor;
        # run a few shapes through it
        fam = family(4, {1, 2, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4})
        for t in [{1, 2}, {3, 4}]:
            res = merge_family(fam, t)
            assert all(len(s) >= 2 for s in res.family.members)
        res = merge_family(family(4, {1, 2, 3, 4}), {1, 2, 3})
        assert all(len(s) >= 2 for s in res.family.members)
