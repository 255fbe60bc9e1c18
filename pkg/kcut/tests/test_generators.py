# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 11 March 2026 09:20 CET (+0100)
"""

import pytest

from kcut import generators
from kcut.graph import VertexSet, boundary_weight


class TestGenerators:
    def test_cycle(self):
        g = generators.cycle(5)
        assert g.m == 5
        assert g.total_weight == 5

    def test_path_weights(self):
        assert generators.path(4, [3, 1, 2]).edges == ((0, 1, 3), (1, 2, 1), (2, 3, 2))

    def test_complete(self):
        assert generators.complete(5).m == 10

    def test_star(self):
        g = generators.star(4)
        assert g.n == 5
        assert boundary_weight(g, VertexSet.from_iterable([0], 5)) == 4

    def test_two_triangles_bridge(self):
        g = generators.two_triangles()
        assert boundary_weight(g, VertexSet.from_iterable([0, 1, 2], 6)) == 1

    def test_cluster_cycle(self):
        g = generators.cluster_cycle(4, 3)
        assert g.n == 12
        clusters = generators.clusters_of(4, 3)
        assert clusters[1] == [3, 4, 5]
        assert boundary_weight(g, VertexSet.from_iterable(clusters[1], 12)) == 2

    @pytest.mark.parametrize("seed", range(5))
    def test_random_connected(self, seed):
        g = generators.random_connected(9, seed, p=0.1)
        assert g.is_connected()
        assert all(1 <= w <= 5 for _, _, w in g.edges)

    def test_random_is_seeded(self):
        assert generators.random_connected(8, 3).edges == generators.random_connected(8, 3).edges

    def test_scaled(self):
        g = generators.scaled(generators.cycle(4), 7)
        assert g.total_weight == 28

    def test_bad_scale(self):
        with pytest.raises(ValueError):
            generators.scaled(generators.cycle(4), 0)
