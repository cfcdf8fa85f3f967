"""Backtracking generation, slot filling, enumeration and counting."""

import math
from itertools import product

import pytest

from ucycles.core import CycleWord, canonicalize
from ucycles.inductive import construct_inductive
from ucycles.searchgen import (
    SearchBudgetExceeded,
    SearchConstraints,
    SearchInfeasible,
    count_distinct,
    enumerate_ucycles,
    fill_linear_slot,
    find_multiset_ucycle,
    generate_subset_ucycle,
)
from ucycles.verify import (
    InadmissibleError,
    verify_multiset_ucycle,
    verify_subset_ucycle,
)

from goldens import DISTINCT_CLASSES_3_2, DISTINCT_CLASSES_4_3


class TestSubsetGeneration:
    @pytest.mark.parametrize("n", [4, 7, 8, 10])
    def test_output_verifies(self, n):
        word = generate_subset_ucycle(n, 3)
        assert len(word) == math.comb(n, 3)
        assert verify_subset_ucycle(word, 3).ok

    def test_pair_windows(self):
        word = generate_subset_ucycle(5, 2)
        assert verify_subset_ucycle(word, 2).ok

    def test_deterministic(self):
        a = generate_subset_ucycle(8, 3)
        b = generate_subset_ucycle(8, 3)
        assert a.letters == b.letters

    def test_required_prefix_honored(self):
        word = generate_subset_ucycle(7, 3, SearchConstraints(required_prefix=(2, 4)))
        assert word.letters[:2] == (2, 4)
        assert verify_subset_ucycle(word, 3).ok

    def test_required_suffix_honored(self):
        word = generate_subset_ucycle(7, 3, SearchConstraints(required_suffix=(4, 3)))
        assert word.letters[-2:] == (4, 3)
        assert verify_subset_ucycle(word, 3).ok

    def test_inadmissible_rejected(self):
        with pytest.raises(InadmissibleError):
            generate_subset_ucycle(6, 3)

    def test_admissible_but_unrealizable(self):
        # 5 divides C(5,3) = 10, yet no word over [5] covers all ten
        # 3-subsets: exhaustive search proves the family empty.
        with pytest.raises(SearchInfeasible):
            generate_subset_ucycle(5, 3)

    def test_unsupported_window_size(self):
        with pytest.raises(ValueError):
            generate_subset_ucycle(8, 4)

    def test_budget_exception_carries_node_count(self):
        with pytest.raises(SearchBudgetExceeded) as info:
            generate_subset_ucycle(
                7, 3, SearchConstraints(required_prefix=(1, 2), node_budget=10)
            )
        assert info.value.nodes >= 10


class TestMultisetGeneration:
    @pytest.mark.parametrize("n, t", [(4, 3), (3, 2), (5, 2), (7, 2), (7, 3), (13, 3)])
    def test_output_verifies(self, n, t):
        word = find_multiset_ucycle(n, t)
        assert len(word) == math.comb(n + t - 1, t)
        assert verify_multiset_ucycle(word, t).ok

    def test_inadmissible_rejected(self):
        # 4 does not divide C(5,2) = 10
        with pytest.raises(InadmissibleError):
            find_multiset_ucycle(4, 2)

    def test_single_letter_alphabet_has_no_windows(self):
        # the only admissible word would be shorter than the window itself
        with pytest.raises(SearchInfeasible):
            find_multiset_ucycle(1, 3)

    def test_deterministic(self):
        assert find_multiset_ucycle(4, 3) == find_multiset_ucycle(4, 3)

    def test_prefix_constraint(self):
        word = find_multiset_ucycle(4, 3, SearchConstraints(required_prefix=(2, 2)))
        assert word.letters[:2] == (2, 2)
        assert verify_multiset_ucycle(word, 3).ok


class TestSlotFilling:
    def test_restores_a_cut_segment(self):
        ls = construct_inductive(4).letters
        residual = [tuple(sorted(ls[p : p + 3])) for p in range(3, 10)]
        slot = fill_linear_slot(residual, ls[3:5], ls[10:12], range(1, 5), t=3)
        seq = ls[3:5] + slot + ls[10:12]
        got = sorted(tuple(sorted(seq[i : i + 3])) for i in range(len(seq) - 2))
        assert got == sorted(residual)

    def test_letter_budget_respected(self):
        ls = construct_inductive(4).letters
        residual = [tuple(sorted(ls[p : p + 3])) for p in range(3, 10)]
        budget = {x: 5 for x in range(1, 5)}
        slot = fill_linear_slot(
            residual, ls[3:5], ls[10:12], range(1, 5), t=3, letter_budget=budget
        )
        for x in range(1, 5):
            assert slot.count(x) <= 5

    def test_impossible_slot_raises(self):
        with pytest.raises(SearchInfeasible):
            fill_linear_slot([(1, 1, 1), (2, 2, 2)], (1, 1), (2, 2), (1, 2), t=3)


class TestCounting:
    def test_frozen_counts(self):
        r43 = count_distinct(4, 3)
        r32 = count_distinct(3, 2)
        assert r43.count_rot_relabel == DISTINCT_CLASSES_4_3
        assert r32.count_rot_relabel == DISTINCT_CLASSES_3_2
        assert r43.exhausted and r32.exhausted

    def test_parallel_equals_sequential(self):
        seq = count_distinct(4, 3)
        par = count_distinct(4, 3, workers=2)
        assert (seq.count_rot_relabel, seq.count_also_reflect, seq.nodes_visited) == (
            par.count_rot_relabel,
            par.count_also_reflect,
            par.nodes_visited,
        )

    def test_inadmissible_counts_zero(self):
        r = count_distinct(4, 2)
        assert r.count_rot_relabel == 0 and r.exhausted

    def test_budget_starvation_reported(self):
        r = count_distinct(5, 3, budget=1000)
        assert not r.exhausted

    def test_single_letter_alphabet(self):
        r = count_distinct(1, 3)
        assert r.count_rot_relabel == 1 and r.exhausted

    def test_as_text_format(self):
        assert count_distinct(3, 2).as_text().startswith("3 2 1 1 true ")

    def test_reflection_never_increases(self):
        r = count_distinct(4, 3)
        assert r.count_also_reflect <= r.count_rot_relabel


class TestEnumeration:
    def test_matches_count(self):
        classes = list(enumerate_ucycles(4, 3))
        assert len(classes) == DISTINCT_CLASSES_4_3
        reps = {c.representative.letters for c in classes}
        assert len(reps) == DISTINCT_CLASSES_4_3
        for c in classes:
            assert verify_multiset_ucycle(c.representative, 3).ok

    def test_limit(self):
        assert len(list(enumerate_ucycles(4, 3, limit=1))) == 1

    def test_unanchored_brute_force_agrees(self):
        # independent route: all 3^6 words, filtered and folded
        found = set()
        for letters in product((1, 2, 3), repeat=6):
            w = CycleWord(3, letters)
            if verify_multiset_ucycle(w, 2).ok:
                found.add(canonicalize(w).representative.letters)
        assert len(found) == DISTINCT_CLASSES_3_2
        anchored = {c.representative.letters for c in enumerate_ucycles(3, 2)}
        assert found == anchored
