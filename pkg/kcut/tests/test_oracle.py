# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 11 March 2026 17:05 CET (+0100)
"""

import pytest

from kcut import generators
from kcut.graph import VertexSet, Partition, Forest
from kcut.oracle import (
    set_partitions,
    brute_min_kcuts,
    brute_cut_census,
    brute_valid_partitions,
    brute_cells,
    brute_has_crossing,
    brute_best_triple,
)
from kcut.setsys import RangeSpace, all_subsets
from kcut.contraction import stirling2


class TestSetPartitions:
    @pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 1), (3, 3), (2, 3)])
    def test_counts(self, n, k):
        assert len(list(set_partitions(range(n), k))) == stirling2(n, k)

    def test_labels_grow(self):
        for labels in set_partitions(range(4), 2):
            assert labels[0] == 0
            assert max(labels) == 1


class TestBruteMinKCuts:
    def test_cycle(self):
        weight, found = brute_min_kcuts(generators.cycle(5), 3)
        assert weight == 3
        assert len(found) == 10

    def test_path(self):
        weight, found = brute_min_kcuts(generators.path(3), 2)
        assert weight == 1
        assert len(found) == 2

    def test_triangle(self):
        weight, found = brute_min_kcuts(generators.complete(3), 3)
        assert weight == 3
        assert found == frozenset([Partition.from_lists([[0], [1], [2]], 3)])


class TestCensus:
    def test_cycle_arcs(self):
        g = generators.cycle(6)
        assert len(brute_cut_census(g, lambda w: w <= 2)) == 30

    def test_complements_both_listed(self):
        found = brute_cut_census(generators.path(3), lambda w: w == 1)
        assert len(found) == 4


class TestValidPartitions:
    def test_path(self):
        f = Forest(VertexSet.full(4), [(0, 1), (1, 2), (2, 3)])
        assert len(brute_valid_partitions(f, 2, 2)) == 6

    def test_budget_beyond_forest(self):
        f = Forest(VertexSet.full(3), [(0, 1)])
        assert brute_valid_partitions(f, 2, 2) == frozenset()


class TestRangeChecks:
    def test_cells(self):
        ranges = [VertexSet.from_iterable(r, 5) for r in ([0, 1], [1, 2], [3])]
        assert len(brute_cells(ranges)) == 5

    def test_crossing(self):
        assert not brute_has_crossing(all_subsets(3))
        rs = RangeSpace(4, [VertexSet.from_iterable([0, 1], 4), VertexSet.from_iterable([1, 2], 4)])
        assert brute_has_crossing(rs)

    def test_best_triple(self):
        assert brute_best_triple(all_subsets(7, size=3)) == 7
        assert brute_best_triple(all_subsets(3, size=1)) == 3
