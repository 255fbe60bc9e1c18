# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 12 March 2026 15:00 CET (+0100)
"""

import io
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kcut.errors import ParseError, RangeSpaceError
from kcut.graph import VertexSet
from kcut.setsys import (
    RangeSpace,
    cell_label,
    cell_mask,
    venn_cells,
    venn_occupancy,
    witness_fraction,
    represents,
    crosses,
    find_crossing_pair,
    find_triple,
    dual_vc_dimension,
    all_subsets,
    read_range_space,
    write_range_space,
)
from kcut.oracle import brute_cells, brute_has_crossing, brute_best_triple
from kcut.tests.conftest import PROPERTY_SETTINGS, range_spaces


def vs(vertices, n):
    return VertexSet.from_iterable(vertices, n)


def power_labels(d):
    items = range(1, d + 1)
    return [frozenset(c) for size in range(d + 1) for c in combinations(items, size)]


def figure_ranges():
    """X = [5] as ids 0..4 with R1 = {1, 2}, R2 = {2, 3}, R3 = {4}"""
    return vs([0, 1], 5), vs([1, 2], 5), vs([3], 5)


def co_singleton_family(n):
    full = (1 << n) - 1
    masks = [0, full] + [1 << i for i in range(n)] + [full ^ (1 << i) for i in range(n)]
    return RangeSpace.from_masks(n, masks)


class TestRangeSpace:
    def test_duplicates_rejected(self):
        with pytest.raises(RangeSpaceError):
            RangeSpace(3, [vs([0], 3), vs([0], 3)])

    def test_from_ranges_dedupes(self):
        rs = RangeSpace.from_ranges(3, [vs([0], 3), vs([1], 3), vs([0], 3)])
        assert len(rs) == 2
        assert rs.masks() == [1, 2]

    def test_universe_mismatch(self):
        with pytest.raises(RangeSpaceError):
            RangeSpace(3, [vs([0], 4)])

    def test_all_subsets(self):
        assert len(all_subsets(4)) == 15
        assert len(all_subsets(10, size=3)) == 120


class TestVenn:
    def test_figure_occupancy(self):
        occupancy = venn_occupancy(*figure_ranges())
        assert occupancy.occupied == frozenset([
            frozenset(), frozenset([1]), frozenset([1, 2]), frozenset([2]), frozenset([3])])
        assert occupancy.cells == 5

    def test_empty_ranges(self):
        empty = VertexSet.empty(4)
        assert venn_occupancy(empty, empty, empty).occupied == frozenset([frozenset()])

    def test_one_element_per_cell(self):
        ranges = [VertexSet.from_iterable([x for x in range(8) if (x >> i) & 1], 8)
                  for i in range(3)]
        assert venn_occupancy(*ranges).cells == 8

    def test_cell_labels(self):
        assert cell_label(0b101) == frozenset([1, 3])
        assert cell_mask(frozenset([1, 3])) == 0b101

    def test_agrees_with_elementwise_scan(self):
        ranges = figure_ranges()
        assert set(cell_label(c) for c in venn_cells(ranges)) == brute_cells(list(ranges))

    @PROPERTY_SETTINGS
    @given(range_spaces(min_n=1, max_n=6), st.data())
    def test_permutation_symmetry(self, rs, data):
        if len(rs) < 3:
            return
        triple = [rs[i] for i in range(3)]
        order = data.draw(st.sampled_from(list(permutations(range(3)))))
        moved = [triple[i] for i in order]
        relabel = {i + 1: order.index(i) + 1 for i in range(3)}
        expected = frozenset(frozenset(relabel[i] for i in label)
                             for label in venn_occupancy(*triple).occupied)
        assert venn_occupancy(*moved).occupied == expected


class TestWitness:
    def test_figure_fraction(self):
        assert witness_fraction(figure_ranges(), power_labels(3)) == Fraction(5, 8)

    def test_single_full_range(self):
        assert witness_fraction([VertexSet.full(4)], [frozenset([1])]) == 1

    def test_disjoint_pair(self):
        ranges = [vs([0], 4), vs([1], 4)]
        assert witness_fraction(ranges, power_labels(2)) == Fraction(3, 4)

    def test_represents(self):
        assert represents(figure_ranges(), power_labels(3), Fraction(5, 8))
        assert not represents(figure_ranges(), power_labels(3), Fraction(3, 4))

    def test_empty_family(self):
        with pytest.raises(RangeSpaceError):
            witness_fraction(figure_ranges(), [])


class TestCrossing:
    def test_crosses(self):
        assert crosses(vs([0, 1], 4), vs([1, 2], 4))
        assert not crosses(vs([0, 1], 3), vs([1, 2], 3))
        assert not crosses(vs([0], 4), vs([0, 1], 4))

    def test_co_singletons_do_not_cross(self):
        rs = co_singleton_family(4)
        assert len(rs) == 10
        assert find_crossing_pair(rs) is None

    def test_pair_found(self):
        rs = RangeSpace(4, [vs([0, 1], 4), vs([1, 2], 4)])
        pair = find_crossing_pair(rs)
        assert pair is not None
        assert crosses(*pair)

    def test_three_elements_never_cross(self):
        assert find_crossing_pair(all_subsets(3)) is None

    @pytest.mark.parametrize("n", range(4, 17))
    def test_co_singletons_reach_two_n_plus_two(self, n):
        rs = co_singleton_family(n)
        assert len(rs) == 2 * n + 2
        assert find_crossing_pair(rs) is None

    @PROPERTY_SETTINGS
    @given(range_spaces(min_n=1, max_n=6, max_ranges=14))
    def test_agrees_with_pairwise_scan(self, rs):
        pair = find_crossing_pair(rs)
        assert (pair is not None) == brute_has_crossing(rs)
        if pair is not None:
            assert crosses(*pair)

    @PROPERTY_SETTINGS
    @given(st.integers(4, 9), st.data())
    def test_large_families_cross(self, n, data):
        masks = data.draw(st.lists(st.integers(0, (1 << n) - 1), unique=True,
                                   min_size=4 * n - 3, max_size=4 * n - 3))
        pair = find_crossing_pair(RangeSpace.from_masks(n, masks))
        assert pair is not None and crosses(*pair)


class TestTriples:
    def test_three_subsets_have_no_full_triple(self):
        assert find_triple(all_subsets(10, size=3), 8) is None

    def test_three_subsets_reach_seven_cells(self):
        witness = find_triple(all_subsets(10, size=3), 7)
        assert witness is not None
        assert witness.occupancy.cells == 7

    def test_two_subsets_stop_at_five_cells(self):
        pairs = all_subsets(6, size=2)
        assert find_triple(pairs, 6) is None
        witness = find_triple(pairs, 5)
        assert witness is not None
        assert witness.occupancy.cells == 5
        assert brute_best_triple(pairs) == 5

    def test_power_set_has_full_triple(self):
        witness = find_triple(all_subsets(8), 8)
        assert witness is not None
        assert witness.occupancy.cells == 8
        assert witness.indices[0] < witness.indices[1] < witness.indices[2]

    def test_forbidden_cells(self):
        forbidden = [frozenset(), frozenset([1, 2, 3])]
        witness = find_triple(all_subsets(10, size=3), 6, forbidden)
        assert witness is not None
        allowed = witness.occupancy.occupied - set(forbidden)
        assert len(allowed) >= 6
        assert find_triple(all_subsets(10, size=3), 7, forbidden) is None

    @PROPERTY_SETTINGS
    @given(range_spaces(min_n=1, max_n=5, max_ranges=8), st.integers(4, 8))
    def test_agrees_with_brute_force(self, rs, min_cells):
        witness = find_triple(rs, min_cells)
        best = brute_best_triple(rs)
        assert (witness is not None) == (best >= min_cells)
        if witness is not None:
            assert witness.occupancy.cells >= min_cells


class TestDualVC:
    def test_single_range(self):
        assert dual_vc_dimension(RangeSpace(4, [vs([0, 1], 4)])) == 1

    def test_power_set(self):
        assert dual_vc_dimension(all_subsets(8)) == 3

    def test_three_subsets(self):
        assert dual_vc_dimension(all_subsets(10, size=3)) == 2

    def test_trivial_ranges(self):
        assert dual_vc_dimension(RangeSpace.from_masks(4, [0, 15])) == 0


class TestRangeFiles:
    def test_read(self):
        rs = read_range_space(io.StringIO("0110\n1100  # comment\n\n0110\n"))
        assert rs.n == 4
        assert rs.masks() == [0b0110, 0b0011]

    def test_write_then_read(self):
        rs = all_subsets(4, size=2)
        handle = io.StringIO()
        write_range_space(rs, handle)
        handle.seek(0)
        assert read_range_space(handle).masks() == rs.masks()

    def test_ragged_lines(self):
        with pytest.raises(ParseError) as e:
            read_range_space(io.StringIO("0110\n011\n"))
        assert e.value.lineno == 2

    def test_bad_character(self):
        with pytest.raises(ParseError):
            read_range_space(io.StringIO("01x0\n"))

    def test_empty(self):
        with pytest.raises(ParseError):
            read_range_space(io.StringIO("# nothing\n"))
