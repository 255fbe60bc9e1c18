# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 04 March 2026 09:15 CET (+0100)

Randomized contraction: the small-cut enumerator (contract to h supernodes,
expand every supernode subset) and repeated contraction to k supernodes for
minimum k-cuts.
"""

import math
from fractions import Fraction
from collections import namedtuple

import numpy

from kcut.errors import Disconnected, TooFewVertices
from kcut.graph import (
    VertexSet,
    Partition,
    boundary_weight,
    forest_crossing,
    identity_mapping,
    compact,
    _find,
)
from kcut.schedule import ScheduleConfig


class CutRecord(object):
    """A cut side together with its boundary weight in the graph it came from."""

    __slots__ = ("set", "weight", "forest_crossings")

    def __init__(self, vset, weight, forest_crossings=None):
        self.set = vset
        self.weight = weight
        self.forest_crossings = forest_crossings

    def crossings(self, f):
        if self.forest_crossings is None:
            self.forest_crossings = forest_crossing(f, self.set)
        return self.forest_crossings

    def sort_key(self):
        return (self.weight, self.set.sort_key())

    def __eq__(self, other):
        return isinstance(other, CutRecord) and self.set == other.set

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.set)

    def __repr__(self):
        return "CutRecord({!r}, weight={})".format(self.set, self.weight)


class NormContext(namedtuple("NormContext", "opt_upper,k")):
    """Normalization against an upper bound on the optimal k-cut.

    A side A has normalized weight 2k * w(A) / opt_upper; ``within`` decides
    ``normalized <= beta`` by integer cross-multiplication.
    """

    __slots__ = ()

    def within(self, weight, beta):
        beta = Fraction(beta)
        return 2 * self.k * weight * beta.denominator <= beta.numerator * self.opt_upper

    def normalized(self, weight):
        """2k * weight / opt_upper, or None when opt_upper is 0 and weight is not"""
        if self.opt_upper == 0:
            return Fraction(0) if weight == 0 else None
        return Fraction(2 * self.k * weight, self.opt_upper)

    def limit(self, beta):
        """Largest integer weight whose normalized value is at most beta"""
        beta = Fraction(beta)
        if beta < 0:
            return -1
        return (beta.numerator * self.opt_upper) // (2 * self.k * beta.denominator)


def get_rng(seed):
    return numpy.random.default_rng(seed)


def repetitions_for(n, alpha, cfg):
    if n < 2:
        return 1
    value = float(cfg.c_rep) * float(n) ** (2.0 * float(alpha)) * math.log(n)
    return max(1, int(math.ceil(value)))


def stirling2(n, k):
    """Number of partitions of n labelled items into k nonempty blocks"""
    if k < 0 or k > n:
        return 0
    row = [1] + [0] * k
    for i in range(1, n + 1):
        for j in range(min(i, k), 0, -1):
            row[j] = j * row[j] + row[j - 1]
        row[0] = 0
    return row[k]


def contraction_phase(g, h, rng_seed=None, mapping=None):
    """Contract random edges, chosen proportional to weight, down to h supernodes.

    Edges are drawn from a prefix-sum table over the phase's input graph and
    draws landing inside one supernode are rejected, which leaves every
    surviving edge chosen proportionally to its weight.  The graph needs at
    most h connected components.
    """
    if g.vertex_count < h:
        raise TooFewVertices("cannot contract {} vertices to {} supernodes".format(
            g.vertex_count, h))
    if g.component_count > h:
        raise Disconnected("{} components cannot be contracted to {} supernodes".format(
            g.component_count, h))
    rng = get_rng(rng_seed)
    if mapping is None:
        mapping = identity_mapping(g)
    parent = {v: v for v in g.vertices}
    remaining = g.vertex_count
    if remaining > h:
        prefix = numpy.cumsum(numpy.array([w for _, _, w in g.edges], dtype=numpy.int64))
        total = int(prefix[-1])
        while remaining > h:
            draws = rng.integers(0, total, size=2 * (remaining - h) + 8)
            for idx in numpy.searchsorted(prefix, draws, side="right"):
                u, v, _ = g.edges[idx]
                ru, rv = _find(parent, u), _find(parent, v)
                if ru == rv:
                    continue
                parent[max(ru, rv)] = min(ru, rv)
                remaining -= 1
                if remaining == h:
                    break
    labels = {v: _find(parent, v) for v in g.vertices}
    return compact(g, labels, mapping)


def _expand(mapping, mask):
    bits = 0
    i = 0
    while mask:
        if mask & 1:
            bits |= mapping[i].bits
        mask >>= 1
        i += 1
    return bits


def _scan_subsets(g, limit):
    """Every proper nonempty subset of the active vertices with boundary <= limit"""
    active = list(g.vertices)
    position = {v: i for i, v in enumerate(active)}
    size = 1 << len(active)
    idx = numpy.arange(size, dtype=numpy.int64)
    totals = numpy.zeros(size, dtype=numpy.int64)
    for u, v, w in g.edges:
        totals += w * (((idx >> position[u]) ^ (idx >> position[v])) & 1)
    keep = totals <= limit
    keep[0] = False
    keep[size - 1] = False
    records = set()
    for local in numpy.nonzero(keep)[0]:
        local = int(local)
        bits = 0
        for i, v in enumerate(active):
            if (local >> i) & 1:
                bits |= 1 << v
        records.add(CutRecord(VertexSet(bits, g.n), int(totals[local])))
    return records


def enum_small_cuts(g, h, alpha, cfg=None, seed=None):
    """Sides A with w(dA) <= alpha * M, M = OPT_h / h, w.h.p.

    OPT_h is replaced by the best h-cut seen across phases, so the result
    is a superset.  Small graphs, where scanning all 2^n subsets costs less
    than the contraction phases would, are scanned exactly.
    """
    if cfg is None:
        cfg = ScheduleConfig()
    if h < 2:
        raise ValueError("h must be at least 2, got {}".format(h))
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError("alpha must be nonnegative, got {}".format(alpha))
    rng = get_rng(seed)
    n = g.vertex_count
    reps = repetitions_for(n, alpha, cfg)
    if cfg.exhaustive_cutover and (1 << n) <= reps * (1 << h):
        contracted, _ = contraction_phase(g, h, rng)
        upper = contracted.total_weight
        return _scan_subsets(g, (alpha.numerator * upper) // (h * alpha.denominator))
    found = {}
    upper = None
    full = (1 << h) - 1
    for _ in range(reps):
        contracted, mapping = contraction_phase(g, h, rng)
        cut = contracted.total_weight
        if upper is None or cut < upper:
            upper = cut
        for mask in range(1, full):
            bits = _expand(mapping, mask)
            if bits not in found:
                found[bits] = boundary_weight(contracted, VertexSet(mask, h))
    limit = (alpha.numerator * upper) // (h * alpha.denominator)
    return set(CutRecord(VertexSet(bits, g.n), w) for bits, w in found.items() if w <= limit)


def exhaustive_min_kcuts(g, k):
    """All minimum k-cuts by branch-and-bound over vertex assignments"""
    order = list(g.vertices)
    count = len(order)
    if count < k:
        raise TooFewVertices("{} vertices cannot form {} parts".format(count, k))
    index = {v: i for i, v in enumerate(order)}
    back = [[] for _ in order]
    for u, v, w in g.edges:
        i, j = index[u], index[v]
        if i < j:
            back[j].append((i, w))
        else:
            back[i].append((j, w))
    labels = [0] * count
    best = [None]
    found = []

    def visit(i, groups, cost):
        if best[0] is not None and cost > best[0]:
            return
        if i == count:
            if best[0] is None or cost < best[0]:
                best[0] = cost
                del found[:]
            found.append(list(labels))
            return
        left = count - i - 1
        top = groups + 1 if groups < k else groups
        for label in range(top):
            used = groups + 1 if label == groups else groups
            if left < k - used:
                continue
            extra = 0
            for j, w in back[i]:
                if labels[j] != label:
                    extra += w
            labels[i] = label
            visit(i + 1, used, cost + extra)

    visit(0, 0, 0)
    partitions = set()
    for assignment in found:
        parts = [0] * k
        for i, label in enumerate(assignment):
            parts[label] |= 1 << order[i]
        partitions.add(Partition(VertexSet(bits, g.n) for bits in parts))
    return best[0], frozenset(partitions)


def karger_stein_min_kcut(g, k, seed=None, cfg=None, repetitions=None):
    """Minimum k-cuts by repeated contraction to k supernodes, w.h.p.

    Without an explicit ``repetitions`` the count is
    c_rep * n^(2(k-1)) * ln n and, when that exceeds the number of
    k-partitions, the exact branch-and-bound is used instead.
    """
    if cfg is None:
        cfg = ScheduleConfig()
    n = g.vertex_count
    if k < 1:
        raise ValueError("k must be positive, got {}".format(k))
    if n < k:
        raise TooFewVertices("{} vertices cannot form {} parts".format(n, k))
    if g.component_count > k:
        raise Disconnected("{} components cannot be contracted to {} parts".format(
            g.component_count, k))
    if k == 1:
        return frozenset([Partition([g.vertices])])
    if n == k:
        return frozenset([Partition(VertexSet(1 << v, g.n) for v in g.vertices)])
    if repetitions is None:
        reps = repetitions_for(n, k - 1, cfg)
        if cfg.exhaustive_cutover and stirling2(n, k) <= reps:
            return exhaustive_min_kcuts(g, k)[1]
    else:
        reps = repetitions
    rng = get_rng(seed)
    best = None
    found = set()
    for _ in range(reps):
        contracted, mapping = contraction_phase(g, k, rng)
        weight = contracted.total_weight
        if best is None or weight < best:
            best = weight
            found = set()
        if weight == best:
            found.add(Partition(mapping))
    return frozenset(found)
