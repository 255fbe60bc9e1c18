# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 12 March 2026 13:30 CET (+0100)
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kcut import generators
from kcut.errors import Disconnected
from kcut.graph import VertexSet, WeightedGraph, Partition, Forest
from kcut.schedule import ScheduleConfig
from kcut.treepack import (
    greedy_tree_pack,
    distinct_trees,
    pack_size_for,
    tree_crossing,
    best_tree_crossing,
)
from kcut.tests.conftest import PROPERTY_SETTINGS, connected_graphs


class TestGreedyTreePack:
    def test_tree_packs_itself(self):
        g = generators.path(4, [2, 5, 1])
        for tree in greedy_tree_pack(g, 5):
            assert tree.edges == ((0, 1), (1, 2), (2, 3))

    def test_cycle_rotates_the_omitted_edge(self):
        g = generators.cycle(4)
        trees = greedy_tree_pack(g, 4)
        omitted = []
        for tree in trees:
            missing = [e[:2] for e in g.edges if e[:2] not in tree.edges]
            assert len(missing) == 1
            omitted.append(missing[0])
        assert sorted(omitted) == sorted(e[:2] for e in g.edges)

    def test_triangle(self):
        trees = greedy_tree_pack(generators.complete(3), 3)
        assert len(distinct_trees(trees)) == 3

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            greedy_tree_pack(WeightedGraph(4, [(0, 1, 1), (2, 3, 1)]), 2)

    def test_deterministic(self):
        g = generators.random_connected(8, 4)
        assert greedy_tree_pack(g, 20) == greedy_tree_pack(g, 20)

    @PROPERTY_SETTINGS
    @given(connected_graphs(), st.integers(1, 12))
    def test_every_tree_spans(self, g, count):
        trees = greedy_tree_pack(g, count)
        assert len(trees) == count
        for tree in trees:
            assert len(tree.edges) == g.n - 1
            assert tree.component_count == 1
            assert tree.vertices == g.vertices

    def test_heavy_edges_carry_more_trees(self):
        g = WeightedGraph(3, [(0, 1, 4), (1, 2, 1), (0, 2, 1)])
        loads = {e[:2]: 0 for e in g.edges}
        for tree in greedy_tree_pack(g, 12):
            for edge in tree.edges:
                loads[edge] += 1
        assert loads[(0, 1)] > loads[(1, 2)]
        assert loads[(0, 1)] > loads[(0, 2)]


class TestDistinctTrees:
    def test_keeps_first_occurrence(self):
        full = VertexSet.full(3)
        a = Forest(full, [(0, 1), (1, 2)])
        b = Forest(full, [(0, 2), (1, 2)])
        assert distinct_trees([a, b, a, b]) == [a, b]


class TestPackSize:
    @pytest.mark.parametrize("k,m,c_pack,expected", [
        (3, 10, 1, 270),
        (2, 1, 1, 8),
        (2, 3, 2, 48),
    ])
    def test_formula(self, k, m, c_pack, expected):
        assert pack_size_for(k, m, ScheduleConfig(c_pack=c_pack)) == expected

    def test_fractional_constant(self):
        assert pack_size_for(2, 3, ScheduleConfig(c_pack=Fraction(1, 5))) == 5


class TestCrossing:
    def test_path_against_arcs(self):
        f = Forest(VertexSet.full(5), [(0, 1), (1, 2), (2, 3), (3, 4)])
        p = Partition.from_lists([[0, 1], [2], [3, 4]], 5)
        assert best_tree_crossing([f], p) == (0, 2)

    def test_single_part(self):
        f = Forest(VertexSet.full(4), [(0, 1), (1, 2), (2, 3)])
        assert tree_crossing(f, Partition([VertexSet.full(4)])) == 0

    def test_singletons(self):
        f = Forest(VertexSet.full(5), [(0, 1), (0, 2), (2, 3), (2, 4)])
        p = Partition(VertexSet(1 << v, 5) for v in range(5))
        assert tree_crossing(f, p) == 4

    def test_best_is_first_minimum(self):
        full = VertexSet.full(4)
        path = Forest(full, [(0, 1), (1, 2), (2, 3)])
        star = Forest(full, [(0, 1), (0, 2), (0, 3)])
        p = Partition.from_lists([[0], [1, 2, 3]], 4)
        assert best_tree_crossing([star, path], p) == (1, 1)
        assert best_tree_crossing([path, path], p) == (0, 1)
