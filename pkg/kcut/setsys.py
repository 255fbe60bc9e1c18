# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 05 March 2026 10:40 CET (+0100)

Range spaces (X, R): Venn-cell occupancy, witnesses, crossing pairs,
triples with many occupied cells and the dual VC dimension.

Cells of a d-tuple of ranges are numbered by bitmask: bit i of a cell is
set when its elements lie in range i + 1.  Public results use label sets
over {1, ..., d} instead.
"""

from fractions import Fraction
from collections import namedtuple
from itertools import combinations

from kcut.errors import ParseError, RangeSpaceError
from kcut.graph import VertexSet, _popcount


class RangeSpace(object):
    """A universe [n] together with distinct ranges over it."""

    def __init__(self, n, ranges):
        ranges = tuple(ranges)
        seen = set()
        for r in ranges:
            if r.n != n:
                raise RangeSpaceError("range {!r} is over [{}] not [{}]".format(r, r.n, n))
            if r.bits in seen:
                raise RangeSpaceError("duplicate range {!r}".format(r))
            seen.add(r.bits)
        self.n = n
        self.ranges = ranges

    @classmethod
    def from_ranges(cls, n, ranges):
        """Build a range space, silently dropping repeated ranges"""
        seen = set()
        unique = []
        for r in ranges:
            if r.bits not in seen:
                seen.add(r.bits)
                unique.append(r)
        return cls(n, unique)

    @classmethod
    def from_masks(cls, n, masks):
        return cls.from_ranges(n, [VertexSet(bits, n) for bits in masks])

    def masks(self):
        return [r.bits for r in self.ranges]

    def __len__(self):
        return len(self.ranges)

    def __iter__(self):
        return iter(self.ranges)

    def __getitem__(self, idx):
        return self.ranges[idx]

    def __repr__(self):
        return "RangeSpace(n={}, ranges={})".format(self.n, len(self.ranges))


class VennOccupancy(namedtuple("VennOccupancy", "occupied")):
    __slots__ = ()

    @property
    def cells(self):
        return len(self.occupied)


TripleWitness = namedtuple("TripleWitness", "indices,ranges,occupancy")


def cell_label(mask):
    return frozenset(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)


def cell_mask(label):
    mask = 0
    for i in label:
        mask |= 1 << (i - 1)
    return mask


def _cells(masks, n):
    full = (1 << n) - 1
    occupied = set()
    for cell in range(1 << len(masks)):
        bits = full
        for i, r in enumerate(masks):
            bits &= r if (cell >> i) & 1 else ~r
            if not bits:
                break
        if bits & full:
            occupied.add(cell)
    return occupied


def venn_cells(ranges):
    """Occupied cells (as bitmasks) of any number of ranges over one universe"""
    ranges = list(ranges)
    return _cells([r.bits for r in ranges], ranges[0].n)


def venn_occupancy(r1, r2, r3):
    return VennOccupancy(frozenset(cell_label(c) for c in venn_cells([r1, r2, r3])))


def witness_fraction(ranges, family):
    family = set(cell_mask(label) for label in family)
    if not family:
        raise RangeSpaceError("cannot witness an empty family")
    occupied = venn_cells(ranges)
    return Fraction(len(family & occupied), len(family))


def represents(ranges, family, alpha):
    return witness_fraction(ranges, family) >= Fraction(alpha)


def crosses(a, b):
    full = (1 << a.n) - 1
    x, y = a.bits, b.bits
    return bool(x & y and x & ~y and y & ~x and full & ~(x | y))


def _overlap(x, y):
    return bool(x & y and x & ~y and y & ~x)


def find_crossing_pair(rs):
    """Two crossing ranges, or None when the family is crossing-free.

    Fix the element 0 and replace every range containing it by its
    complement.  Two reduced sets then cross iff they overlap, so the
    search is a laminarity test: process reduced sets by decreasing size
    and track, per element, the smallest set seen so far containing it.
    A set whose elements disagree on that owner overlaps one of the owners.
    """
    n = rs.n
    full = (1 << n) - 1
    reduced = {}
    for idx, r in enumerate(rs.ranges):
        bits = full & ~r.bits if r.bits & 1 else r.bits
        if bits:
            reduced.setdefault(bits, idx)
    owner = [None] * n
    for bits in sorted(reduced, key=lambda b: (-_popcount(b), b)):
        members = list(VertexSet(bits, n))
        owners = set(owner[v] for v in members)
        if len(owners) > 1:
            for other in owners:
                if other is not None and _overlap(bits, other):
                    return rs[reduced[other]], rs[reduced[bits]]
            raise RangeSpaceError("laminarity scan lost its overlapping owner")
        for v in members:
            owner[v] = bits
    return None


def _family_masks(forbidden_cells):
    forbidden = set(cell_mask(label) for label in (forbidden_cells or ()))
    return set(range(8)) - forbidden


def find_triple(rs, min_cells, forbidden_cells=None):
    """First triple (lexicographic by index) with >= min_cells occupied cells
    outside ``forbidden_cells``.

    A pair is skipped when even a perfect third range could not split its
    cells into enough allowed cells.
    """
    family = _family_masks(forbidden_cells)
    if min_cells > len(family):
        return None
    n = rs.n
    full = (1 << n) - 1
    masks = rs.masks()
    m = len(masks)
    for i in range(m):
        a = masks[i]
        for j in range(i + 1, m):
            b = masks[j]
            pair_cells = (full & ~a & ~b, a & ~b, b & ~a, a & b)
            bound = 0
            for c, bits in enumerate(pair_cells):
                if not bits:
                    continue
                allowed = (c in family) + ((c | 4) in family)
                bound += allowed if _popcount(bits) > 1 else min(allowed, 1)
            if bound < min_cells:
                continue
            for l in range(j + 1, m):
                r = masks[l]
                count = 0
                for c, bits in enumerate(pair_cells):
                    if c in family and bits & ~r:
                        count += 1
                    if (c | 4) in family and bits & r:
                        count += 1
                if count >= min_cells:
                    triple = (rs[i], rs[j], rs[l])
                    return TripleWitness((i, j, l), triple, venn_occupancy(*triple))
    return None


def _shattering_tuple(masks, d, n):
    need = 1 << (d - 1)
    candidates = [b for b in masks if _popcount(b) >= need and n - _popcount(b) >= need]

    def extend(chosen, start):
        if len(chosen) == d:
            return chosen
        for idx in range(start, len(candidates)):
            trial = chosen + [candidates[idx]]
            if len(_cells(trial, n)) == 1 << len(trial):
                result = extend(trial, idx + 1)
                if result is not None:
                    return result
        return None

    return extend([], 0)


def dual_vc_dimension(rs, max_d=4):
    """Largest d <= max_d such that some d ranges occupy all 2^d cells"""
    masks = rs.masks()
    best = 0
    for d in range(1, max_d + 1):
        if (1 << d) > rs.n or _shattering_tuple(masks, d, rs.n) is None:
            break
        best = d
    return best


def all_subsets(n, size=None):
    """Range space of every nonempty subset of [n] (or every ``size``-subset)"""
    if size is None:
        return RangeSpace.from_masks(n, range(1, 1 << n))
    masks = []
    for combo in combinations(range(n), size):
        bits = 0
        for v in combo:
            bits |= 1 << v
        masks.append(bits)
    return RangeSpace.from_masks(n, masks)


def read_range_space(handle):
    """Ranges as one bitstring per line (character i is element i)"""
    ranges = []
    width = None
    for lineno, line in enumerate(handle, 1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if width is None:
            width = len(text)
        elif len(text) != width:
            raise ParseError("bitstring of length {} after {}".format(len(text), width), lineno)
        try:
            ranges.append(VertexSet.from_bitstring(text))
        except ValueError as e:
            raise ParseError(str(e), lineno)
    if width is None:
        raise ParseError("no ranges found")
    return RangeSpace.from_ranges(width, ranges)


def write_range_space(rs, handle):
    for r in rs.ranges:
        handle.write("{}\n".format(r.to_bitstring()))
