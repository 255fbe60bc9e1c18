# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 05 March 2026 15:12 CET (+0100)

Brute-force ground truth.  Nothing here shares code with the algorithms
it checks beyond the basic graph types.
"""

from kcut.graph import VertexSet, Partition

# the most vertices brute force is asked to handle
BRUTE_FORCE_LIMIT = 12


def set_partitions(items, k):
    """Yield label lists assigning ``items`` to exactly k blocks.

    Restricted-growth strings; branches that can no longer reach k blocks
    are cut during generation.
    """
    items = list(items)
    count = len(items)
    labels = [0] * count

    def grow(i, used):
        if count - i < k - used:
            return
        if i == count:
            if used == k:
                yield list(labels)
            return
        for label in range(min(used + 1, k)):
            labels[i] = label
            for result in grow(i + 1, max(used, label + 1)):
                yield result

    for result in grow(0, 0):
        yield result


def _to_partition(items, labels, k, n):
    parts = [0] * k
    for v, label in zip(items, labels):
        parts[label] |= 1 << v
    return Partition(VertexSet(bits, n) for bits in parts)


def _cut_weight(g, items, labels):
    where = dict(zip(items, labels))
    total = 0
    for u, v, w in g.edges:
        if where[u] != where[v]:
            total += w
    return total


def brute_min_kcuts(g, k):
    items = list(g.vertices)
    best = None
    winners = []
    for labels in set_partitions(items, k):
        weight = _cut_weight(g, items, labels)
        if best is None or weight < best:
            best = weight
            winners = [labels]
        elif weight == best:
            winners.append(labels)
    return best, frozenset(_to_partition(items, labels, k, g.n) for labels in winners)


def brute_cut_census(g, predicate):
    """Proper nonempty sides A (subsets, not complementary pairs) with predicate(w(dA))"""
    items = list(g.vertices)
    found = []
    for mask in range(1, (1 << len(items)) - 1):
        side = set(v for i, v in enumerate(items) if (mask >> i) & 1)
        weight = 0
        for u, v, w in g.edges:
            if (u in side) != (v in side):
                weight += w
        if predicate(weight):
            found.append(VertexSet.from_iterable(side, g.n))
    return found


def brute_valid_partitions(f, s, k):
    """Every k-partition of the forest's vertices obtainable by deleting s
    forest edges: those crossing at most s forest edges, given s <= |edges|"""
    if s > len(f.edges) or s + f.component_count < k:
        return frozenset()
    items = list(f.vertices)
    found = set()
    for labels in set_partitions(items, k):
        where = dict(zip(items, labels))
        crossing = sum(1 for u, v in f.edges if where[u] != where[v])
        if crossing <= s:
            found.add(_to_partition(items, labels, k, f.vertices.n))
    return frozenset(found)


def brute_cells(ranges):
    """Occupied cells (label sets) of a tuple of ranges, element by element"""
    n = ranges[0].n
    cells = set()
    for x in range(n):
        cells.add(frozenset(i + 1 for i, r in enumerate(ranges) if x in r))
    return cells


def brute_has_crossing(rs):
    for a in range(len(rs)):
        for b in range(a + 1, len(rs)):
            if len(brute_cells([rs[a], rs[b]])) == 4:
                return True
    return False


def brute_best_triple(rs, forbidden_cells=()):
    forbidden = set(frozenset(c) for c in forbidden_cells)
    best = 0
    m = len(rs)
    for a in range(m):
        for b in range(a + 1, m):
            for c in range(b + 1, m):
                cells = brute_cells([rs[a], rs[b], rs[c]]) - forbidden
                best = max(best, len(cells))
    return best
