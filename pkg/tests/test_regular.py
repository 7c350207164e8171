import pytest
from hypothesis import given

import oracles
from conftest import partitions
from corecrystal.partition import Partition, count_standard_tableaux, enumerate_partitions, is_regular
from corecrystal.regular import (
    LOCKED_BOTH,
    LOCKED_I,
    LOCKED_II,
    UNLOCKED,
    check_dimension_conjecture,
    deregularization_arrangement,
    deregularize,
    dimension_pair,
    lock_labels,
    locked_boxes,
    regularization_class,
    regularize,
    render_locks,
)
from corecrystal.errors import SizeLimitExceeded
from corecrystal.rimhook import is_ladder_node

STAIRCASE_LOCKS = "\n".join(["L L L U U U", "L L L U U", "L L U U", "L L U", "L", "L"])


class TestRegularize:
    def test_examples(self):
        assert regularize((2, 2, 2, 1, 1, 1), 3) == (3, 3, 2, 1)
        assert regularize((3, 3, 2, 1), 3) == (3, 3, 2, 1)
        assert regularize((2, 1, 1, 1, 1), 3) == (3, 2, 1)

    def test_modulus_two_uses_unit_slope(self):
        assert regularize((1, 1), 2) == (2,)
        assert all(is_regular(regularize(lam, 2), 2) for lam in enumerate_partitions(9))

    def test_image_is_exactly_the_regular_partitions(self):
        for ell in (3, 4):
            for n in range(15):
                image = {regularize(lam, ell) for lam in enumerate_partitions(n)}
                assert image == {lam for lam in enumerate_partitions(n) if is_regular(lam, ell)}
                assert all(regularize(mu, ell) == mu for mu in image)


class TestLocks:
    def test_lock_grid_example(self):
        assert render_locks((6, 5, 4, 3, 1, 1), 3) == STAIRCASE_LOCKS
        expected = {(r, c) for r in (1, 2) for c in (1, 2, 3)} | {(r, c) for r in (3, 4) for c in (1, 2)} | {(5, 1), (6, 1)}
        assert locked_boxes((6, 5, 4, 3, 1, 1), 3) == expected

    def test_single_row_fully_locked(self):
        assert all(label != UNLOCKED for label in lock_labels((7,), 3).values())

    def test_label_structure(self):
        for ell in (3, 4):
            for n in range(12):
                for lam in enumerate_partitions(n):
                    labels = lock_labels(lam, ell)
                    for (r, c), label in labels.items():
                        if label != UNLOCKED and r > 1:
                            assert labels[(r - 1, c)] != UNLOCKED
                        if label == LOCKED_II:
                            assert any(labels.get((r, d)) in (LOCKED_I, LOCKED_BOTH, LOCKED_II) for d in range(c + 1, lam[r - 1] + 1))

    def test_all_locked_exactly_on_ladder_nodes(self):
        for ell in (3, 4):
            for n in range(13):
                for lam in enumerate_partitions(n):
                    all_locked = len(locked_boxes(lam, ell)) == lam.size
                    assert all_locked == is_ladder_node(lam, ell) == (deregularize(lam, ell) == lam)


class TestDeregularize:
    def test_deregularize_example(self):
        assert deregularize((6, 5, 4, 3, 1, 1), 3) == (3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1)

    def test_fixes_ladder_nodes(self):
        for lam in ((2, 1, 1, 1), (1, 1, 1), (3, 1, 1)):
            assert deregularize(lam, 3) == lam

    def test_arrangement_is_valid(self):
        for ell in (3, 4):
            for n in range(13):
                for lam in enumerate_partitions(n):
                    arrangement = deregularization_arrangement(lam, ell)
                    assert arrangement.is_valid(ell)
                    assert sorted(s for s, _ in arrangement.moves) == sorted(lam.boxes())

    def test_class_extremes_against_brute_force(self):
        for ell in (3, 4):
            for n in range(11):
                for lam in enumerate_partitions(n):
                    members = oracles.class_by_ladder_content(lam, ell)
                    low, high = oracles.dominance_extremes(members)
                    assert deregularize(lam, ell) == low
                    assert regularize(lam, ell) == high

    def test_idempotence_and_absorption(self):
        for ell in (3, 4):
            for n in range(13):
                for lam in enumerate_partitions(n):
                    s, r = deregularize(lam, ell), regularize(lam, ell)
                    assert deregularize(s, ell) == s and regularize(r, ell) == r
                    assert deregularize(r, ell) == s and regularize(s, ell) == r


class TestClasses:
    def test_example(self):
        expected = {(2, 2, 2, 1, 1, 1), (2, 2, 2, 2, 1), (3, 2, 1, 1, 1, 1), (3, 2, 2, 2), (3, 3, 1, 1, 1), (3, 3, 2, 1)}
        assert set(regularization_class((2, 2, 2, 1, 1, 1), 3)) == expected

    def test_regular_member_is_the_maximum(self):
        members = regularization_class((3, 3, 2, 1), 3)
        assert max(members) == (3, 3, 2, 1)

    def test_classes_partition_all_partitions(self):
        seen = {}
        for lam in enumerate_partitions(6):
            seen.setdefault(regularize(lam, 3), regularization_class(lam, 3))
        assert sum(len(c) for c in seen.values()) == 11

    def test_size_cap(self, monkeypatch):
        monkeypatch.setenv("CORECRYSTAL_MAX_N", "5")
        with pytest.raises(SizeLimitExceeded):
            regularization_class((3, 3), 3)
        assert len(regularization_class((3, 3), 3, cap=6)) >= 1

    @given(partitions(max_size=12))
    def test_members_agree_with_ladder_content(self, lam):
        got = set(regularization_class(lam, 3))
        assert got == set(oracles.class_by_ladder_content(lam, 3))


class TestDimension:
    def test_staircase_example(self):
        assert deregularize((3, 2, 1), 3) == (2, 1, 1, 1, 1)
        assert dimension_pair((3, 2, 1), 3) == (5, 16)

    def test_regular_ladder_nodes_give_equality(self):
        for lam in enumerate_partitions(8):
            if is_regular(lam, 3) and is_ladder_node(lam, 3):
                low, high = dimension_pair(lam, 3)
                assert low == high == count_standard_tableaux(lam)

    def test_small_sweep(self):
        report = check_dimension_conjecture(9, 3)
        assert report.ok and report.checked == 30
