# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 07 March 2026 13:45 CET (+0100)

Normalized small-cut censuses and the constructive cheap k-cut assembly:
given many sides of normalized weight below 3 - gamma, cut them into an
existing partition until it has k parts, showing the supply of such sides
cannot be large without beating the optimum.
"""

import math
from fractions import Fraction
from collections import namedtuple

from kcut.graph import VertexSet, Partition, partition_weight
from kcut.contraction import enum_small_cuts, get_rng
from kcut.schedule import ScheduleConfig
from kcut.setsys import RangeSpace, find_crossing_pair, find_triple


CensusEntry = namedtuple("CensusEntry", "beta,count,cuts")
Assembly = namedtuple("Assembly", "partition,weight,normalized,trace")


def small_cut_census(g, k, norm, thresholds, cfg=None, seed=None):
    """One CensusEntry per normalized threshold beta, cuts sorted by weight"""
    if cfg is None:
        cfg = ScheduleConfig()
    rng = get_rng(seed)
    census = []
    for beta in thresholds:
        beta = Fraction(beta)
        if beta < 0:
            census.append(CensusEntry(beta, 0, []))
            continue
        found = enum_small_cuts(g, k, beta / 2, cfg, rng)
        cuts = sorted((r for r in found if norm.within(r.weight, beta)),
                      key=lambda r: r.sort_key())
        census.append(CensusEntry(beta, len(cuts), cuts))
    return census


def extremal_caps(n, k, cfg=None):
    """(beta, cap) for the four extremal statements, without their constants"""
    if cfg is None:
        cfg = ScheduleConfig()
    power = 2 ** k
    gamma = cfg.gamma
    return [
        (3 - gamma, power * n),
        (Fraction(10, 3) - gamma, power * n ** 2),
        (4 - gamma, power * n ** 2.75),
        (Fraction(14, 3) - gamma, power * n ** 3.75),
    ]


def small_cut_cap(n, h, beta):
    """2^h * n^beta, the counting bound for sides of normalized weight <= beta"""
    return 2 ** h * float(n) ** float(beta)


def census_rows(census, n, k):
    for entry in census:
        yield (n, k, entry.beta, entry.count, int(math.floor(small_cut_cap(n, k, entry.beta))))


def _refine(parts, a):
    """Split every part that ``a`` cuts"""
    refined = []
    for part in parts:
        inside = part & a
        if inside and inside != part:
            refined.extend([inside, part - a])
        else:
            refined.append(part)
    return refined


def _cut_parts(parts, a):
    return [idx for idx, part in enumerate(parts) if (part & a) and not part.issubset(a)]


def _cheaper(norm, weight, limit):
    value = norm.normalized(weight)
    return value is not None and value < limit


def _local(part, a, index):
    bits = 0
    for v in part & a:
        bits |= 1 << index[v]
    return VertexSet(bits, len(part))


def _buckets(parts, cuts):
    """Per part: the distinct traces X = A & S of cuts splitting only that part"""
    buckets = {}
    for cut in cuts:
        hit = _cut_parts(parts, cut.set)
        if len(hit) != 1:
            continue
        idx = hit[0]
        trace = parts[idx] & cut.set
        buckets.setdefault(idx, {}).setdefault(trace.bits, cut)
    return buckets


def _bucket_space(part, bucket):
    index = {v: i for i, v in enumerate(part)}
    owners = {}
    for bits, cut in bucket.items():
        owners[_local(part, VertexSet(bits, part.n), index).bits] = cut
    return RangeSpace(len(part), [VertexSet(bits, len(part)) for bits in owners]), owners


def _apply_triple(parts, buckets, triple_cells):
    for idx in sorted(buckets):
        rs, owners = _bucket_space(parts[idx], buckets[idx])
        if len(rs) < 3:
            continue
        witness = find_triple(rs, triple_cells)
        if witness is not None:
            chosen = [owners[r.bits] for r in witness.ranges]
            for cut in chosen:
                parts = _refine(parts, cut.set)
            return parts
    return None


def _apply_crossing(parts, buckets):
    for idx in sorted(buckets):
        rs, owners = _bucket_space(parts[idx], buckets[idx])
        pair = find_crossing_pair(rs)
        if pair is not None:
            for r in pair:
                parts = _refine(parts, owners[r.bits].set)
            return parts
    return None


def _merge_heaviest(g, parts, k):
    parts = list(parts)
    while len(parts) > k:
        owner = {}
        for idx, part in enumerate(parts):
            for v in part:
                owner[v] = idx
        between = {}
        for u, v, w in g.edges:
            a, b = owner[u], owner[v]
            if a != b:
                key = (min(a, b), max(a, b))
                between[key] = between.get(key, 0) + w
        if between:
            a, b = sorted(between.items(), key=lambda item: (-item[1], item[0]))[0][0]
        else:
            a, b = 0, 1
        parts[a] = parts[a] | parts[b]
        del parts[b]
    return parts


def assemble_cheap_kcut(g, cuts, k, gamma, norm, triple_cells=None):
    """Build a k-cut out of cheap sides, or None once they stop applying.

    Stage 1 runs while fewer than k - 2 parts exist: a side splitting two or
    more parts is applied on its own, otherwise the traces of sides that
    split a single part are searched for a crossing pair (or, with
    ``triple_cells``, a triple occupying that many cells) and all of them
    are applied.  Stage 2 applies any side splitting some part until k
    parts exist.  Extra parts are merged along their heaviest connection.
    """
    limit = 3 - Fraction(gamma)
    cheap = [c for c in cuts if _cheaper(norm, c.weight, limit)]
    if not cheap or k < 2:
        return None
    parts = [g.vertices]
    trace = [1]
    while len(parts) < k - 2:
        wide = next((c for c in cheap if len(_cut_parts(parts, c.set)) >= 2), None)
        if wide is not None:
            parts = _refine(parts, wide.set)
            trace.append(len(parts))
            continue
        buckets = _buckets(parts, cheap)
        refined = None
        if triple_cells is not None:
            refined = _apply_triple(parts, buckets, triple_cells)
        if refined is None:
            refined = _apply_crossing(parts, buckets)
        if refined is None:
            break
        parts = refined
        trace.append(len(parts))
    while len(parts) < k:
        single = next((c for c in cheap if _cut_parts(parts, c.set)), None)
        if single is None:
            return None
        parts = _refine(parts, single.set)
        trace.append(len(parts))
    partition = Partition(_merge_heaviest(g, parts, k))
    weight = partition_weight(g, partition)
    return Assembly(partition, weight, norm.normalized(weight), trace)
