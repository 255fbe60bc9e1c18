# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 06 March 2026 09:30 CET (+0100)

Enumeration of all minimum k-cuts.  A spanning tree T is packed for every
minimum k-cut so that T crosses it at most 2k - 2 times; for each tree and
each forest budget s the recursive search either

* hands small k to the contraction base case,
* brute-forces all (F, s, k)-valid partitions when the budget z(k, s) is
  negative, or
* branches on candidate parts A grouped by their forest crossings l,
  recursing on G[V - A] with k - 1 parts and budget s - l.
"""

import math
import multiprocessing
from fractions import Fraction
from itertools import combinations
from collections import Counter, defaultdict

import numpy

from kcut.errors import Disconnected, GraphError, InvalidBudget, TooFewVertices
from kcut.graph import (
    VertexSet,
    Partition,
    boundary_weight,
    partition_weight,
    delete_vertices,
    forest_restrict,
    forest_crossing,
    merge_blocks,
    component_groupings,
    _find,
)
from kcut.contraction import (
    CutRecord,
    NormContext,
    enum_small_cuts,
    karger_stein_min_kcut,
    get_rng,
)
from kcut.schedule import ScheduleConfig, budget_z, beta_ell, potential_phi
from kcut.treepack import greedy_tree_pack, distinct_trees, pack_size_for


class Telemetry(object):
    """Per-depth counters of one enumeration; merged across workers"""

    def __init__(self):
        self.calls = Counter()
        self.branches = Counter()
        self.brute_force = Counter()
        self.base_cases = Counter()
        self.family_sizes = Counter()
        self.phi = defaultdict(list)
        self.trees = 0
        self.runs = 0

    def merge(self, other):
        self.calls.update(other.calls)
        self.branches.update(other.branches)
        self.brute_force.update(other.brute_force)
        self.base_cases.update(other.base_cases)
        self.family_sizes.update(other.family_sizes)
        for depth, values in other.phi.items():
            self.phi[depth].extend(values)
        self.trees += other.trees
        self.runs += other.runs
        return self

    def depths(self):
        return sorted(set(self.calls) | set(self.branches))

    def as_dict(self):
        return {
            "trees": self.trees,
            "runs": self.runs,
            "calls": {str(d): self.calls[d] for d in sorted(self.calls)},
            "branches": {str(d): self.branches[d] for d in sorted(self.branches)},
            "brute_force": {str(d): self.brute_force[d] for d in sorted(self.brute_force)},
            "base_cases": {str(d): self.base_cases[d] for d in sorted(self.base_cases)},
            "family_sizes": {str(l): self.family_sizes[l] for l in sorted(self.family_sizes)},
            "phi": {str(d): max(self.phi[d]) for d in sorted(self.phi) if self.phi[d]},
        }


class BranchState(object):
    """One call of the recursive search.

    ``k0`` is the part count at the root, ``bound`` the best complete weight
    known (heavier partial solutions are pruned, ties are kept) and
    ``cache`` holds small-cut pools and base-case results shared by every
    call of one enumeration.
    """

    def __init__(self, g, k, f, s, norm, depth=0, k0=None, bound=None, telemetry=None,
                 cache=None):
        self.g = g
        self.k = k
        self.f = f
        self.s = s
        self.norm = norm
        self.depth = depth
        self.k0 = k if k0 is None else k0
        self.bound = bound
        self.telemetry = Telemetry() if telemetry is None else telemetry
        self.cache = {} if cache is None else cache

    @property
    def budget(self):
        return self.s + self.f.component_count

    def __repr__(self):
        return "BranchState(k={}, s={}, kappa={}, active={}, depth={})".format(
            self.k, self.s, self.f.component_count, self.g.vertex_count, self.depth)


def descend(state, a, weight=None, ell=None):
    """The child state after fixing ``a`` as one part"""
    if weight is None:
        weight = boundary_weight(state.g, a)
    if ell is None:
        ell = forest_crossing(state.f, a)
    return BranchState(
        delete_vertices(state.g, a),
        state.k - 1,
        forest_restrict(state.f, a),
        state.s - ell,
        NormContext(state.norm.opt_upper - weight, state.k - 1),
        depth=state.depth + 1,
        k0=state.k0,
        bound=None if state.bound is None else state.bound - weight,
        telemetry=state.telemetry,
        cache=state.cache,
    )


def family_schedule(k, s, n, cfg):
    """(l, beta, cap) for the enumerated families l = 2..s; cap None is unbounded"""
    power = cfg.cap_const * 2 ** k
    fixed = {
        2: (3 - cfg.gamma, int(math.ceil(power * n))),
        3: (4 - cfg.gamma, int(math.ceil(power * n ** 2.75))),
        4: (Fraction(14, 3) - cfg.gamma, int(math.ceil(power * n ** 3.75))),
    }
    schedule = []
    for ell in range(2, s + 1):
        if ell in fixed:
            beta, cap = fixed[ell]
        else:
            beta, cap = beta_ell(k, s, cfg, ell), None
        if beta >= 0:
            schedule.append((ell, beta, cap))
    return schedule


def _smallest_within(pool, norm, beta, cap):
    limit = norm.limit(beta)
    chosen = []
    for record in pool:
        if record.weight > limit:
            break
        chosen.append(record)
        if cap is not None and len(chosen) == cap:
            break
    return chosen


def enum_cuts(g, norm, beta, cap, cfg=None, seed=None):
    """The ``cap`` lightest sides with normalized weight <= beta (ties by vertex order)"""
    if cfg is None:
        cfg = ScheduleConfig()
    beta = Fraction(beta)
    pool = sorted(enum_small_cuts(g, norm.k, beta / 2, cfg, seed), key=CutRecord.sort_key)
    return _smallest_within(pool, norm, beta, cap)


def _unions(blocks, proper=True):
    """Bitmasks of unions of ``blocks``; proper ones skip the empty and full union"""
    blocks = list(blocks)
    start, stop = (1, (1 << len(blocks)) - 1) if proper else (0, 1 << len(blocks))
    for mask in range(start, stop):
        bits = 0
        for i, block in enumerate(blocks):
            if (mask >> i) & 1:
                bits |= block.bits
        yield bits


def forest_component_unions(f):
    """Proper nonempty unions of whole forest components (no forest edge crosses)"""
    n = f.vertices.n
    return [VertexSet(bits, n) for bits in _unions(f.components())]


def forest_edge_adjusted_unions(f):
    """Sides crossed by exactly one forest edge: one side of a split component
    plus any union of the other components"""
    n = f.vertices.n
    components = f.components()
    found = set()
    for edge in f.edges:
        side_u, side_v = f.split_at(edge)
        others = [c for c in components if edge[0] not in c]
        for extra in _unions(others, proper=False):
            for side in (side_u, side_v):
                found.add(VertexSet(side.bits | extra, n))
    return sorted(found, key=VertexSet.sort_key)


def _deletion_pieces(f, s):
    """Pieces of F minus every choice of s forest edges"""
    n = f.vertices.n
    for deleted in combinations(range(len(f.edges)), s):
        gone = set(deleted)
        parent = {v: v for v in f.vertices}
        for idx, (u, v) in enumerate(f.edges):
            if idx in gone:
                continue
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups = {}
        for v in f.vertices:
            root = _find(parent, v)
            groups[root] = groups.get(root, 0) | (1 << v)
        yield [VertexSet(groups[r], n) for r in sorted(groups)]


def _check_budget(f, s, k):
    if s < 0 or s > len(f.edges):
        raise InvalidBudget("s={} outside [0, {}] forest edges".format(s, len(f.edges)))
    if s + f.component_count < k:
        raise InvalidBudget("s + kappa(F) = {} < k = {}".format(s + f.component_count, k))


def valid_partitions(g, f, s, k):
    """Every (F, s, k)-valid partition, each once"""
    if f.vertices != g.vertices:
        raise GraphError("forest and graph disagree on the vertex set")
    _check_budget(f, s, k)
    seen = set()
    for pieces in _deletion_pieces(f, s):
        for p in merge_blocks(pieces, k):
            if p not in seen:
                seen.add(p)
                yield p


def _cheapest_valid(state):
    """Minimum-weight valid partitions, by branch-and-bound over groupings"""
    g, f, s, k = state.g, state.f, state.s, state.k
    best = [state.bound]
    found = {}
    for pieces in _deletion_pieces(f, s):
        count = len(pieces)
        if count < k:
            continue
        piece_of = {}
        for idx, piece in enumerate(pieces):
            for v in piece:
                piece_of[v] = idx
        between = [[0] * count for _ in range(count)]
        for u, v, w in g.edges:
            a, b = piece_of[u], piece_of[v]
            if a != b:
                between[a][b] += w
                between[b][a] += w
        labels = [0] * count

        def visit(i, used, cost):
            if best[0] is not None and cost > best[0]:
                return
            if i == count:
                if best[0] is None or cost < best[0]:
                    best[0] = cost
                    found.clear()
                parts = [0] * k
                for idx, label in enumerate(labels):
                    parts[label] |= pieces[idx].bits
                found[Partition(VertexSet(bits, g.n) for bits in parts)] = cost
                return
            left = count - i - 1
            row = between[i]
            for label in range(min(used + 1, k)):
                now = max(used, label + 1)
                if left < k - now:
                    continue
                extra = 0
                for j in range(i):
                    if labels[j] != label:
                        extra += row[j]
                labels[i] = label
                visit(i + 1, now, cost + extra)

        visit(0, 0, 0)
    return found


def _base_case(state, cfg, rng):
    g, k = state.g, state.k
    key = ("base", g.vertices.bits, k)
    if key not in state.cache:
        if g.component_count > k:
            partitions = frozenset(component_groupings(g, k))
        else:
            partitions = karger_stein_min_kcut(g, k, rng, cfg)
        weight = partition_weight(g, next(iter(partitions)))
        state.cache[key] = (weight, partitions)
    weight, partitions = state.cache[key]
    if state.bound is not None and weight > state.bound:
        return {}
    return dict.fromkeys(partitions, weight)


def _cut_pool(state, cfg, beta_max, rng):
    g, k = state.g, state.k
    key = ("pool", g.vertices.bits, k, beta_max)
    if key not in state.cache:
        if g.component_count > k:
            pool = [CutRecord(VertexSet(bits, g.n), 0) for bits in _unions(g.components())]
        else:
            pool = enum_small_cuts(g, k, beta_max / 2, cfg, rng)
        state.cache[key] = sorted(pool, key=CutRecord.sort_key)
    return state.cache[key]


def _candidates(state, cfg, rng):
    """(l, A) for every candidate part: the l = 0 and l = 1 families from the
    forest, the l >= 2 families from the small-cut pool"""
    f, norm, tel = state.f, state.norm, state.telemetry
    whole = forest_component_unions(f)
    split = forest_edge_adjusted_unions(f)
    tel.family_sizes[0] += len(whole)
    tel.family_sizes[1] += len(split)
    candidates = [(0, a) for a in whole] + [(1, a) for a in split]
    schedule = family_schedule(state.k, state.s, state.g.vertex_count, cfg)
    if schedule:
        pool = _cut_pool(state, cfg, max(beta for _, beta, _ in schedule), rng)
        for ell, beta, cap in schedule:
            family = [r.set for r in _smallest_within(pool, norm, beta, cap)
                      if forest_crossing(f, r.set) == ell]
            tel.family_sizes[ell] += len(family)
            candidates.extend((ell, a) for a in family)
    return candidates


def _branch(state, cfg, rng):
    g, k, norm = state.g, state.k, state.norm
    found = {}
    best = state.bound
    seen = set()
    for ell, a in _candidates(state, cfg, rng):
        if a in seen or not a or a == g.vertices:
            continue
        seen.add(a)
        if g.vertex_count - len(a) < k - 1:
            continue
        weight = boundary_weight(g, a)
        if weight > norm.opt_upper or (best is not None and weight > best):
            continue
        child = descend(state, a, weight, ell)
        child.bound = None if best is None else best - weight
        state.telemetry.branches[state.depth] += 1
        for p, rest in _search(child, cfg, rng).items():
            total = weight + rest
            if best is None or total < best:
                best = total
            found[p.with_part(a)] = total
    return found


def _keep_minimum(found):
    if not found:
        return found
    weight = min(found.values())
    return {p: w for p, w in found.items() if w == weight}


def _search(state, cfg, rng):
    """Lightest partitions found among those F crosses exactly s times

    The base case and the brute-force leaf may also return lighter
    partitions crossed fewer times; those are valid for s as well.
    """
    g, k, f, s = state.g, state.k, state.f, state.s
    tel = state.telemetry
    tel.calls[state.depth] += 1
    if k == 1:
        return {Partition([g.vertices]): 0} if 0 <= s <= len(f.edges) else {}
    if s < 0 or s > len(f.edges) or state.budget < k or g.vertex_count < k:
        return {}
    tel.phi[state.depth].append(potential_phi(k, s, state.k0, cfg))
    if k < cfg.base_cutoff:
        tel.base_cases[state.depth] += 1
        found = _base_case(state, cfg, rng)
    elif budget_z(k, s, cfg) < 0:
        tel.brute_force[state.depth] += 1
        found = _cheapest_valid(state)
    else:
        found = _branch(state, cfg, rng)
    return _keep_minimum(found)


def _at_crossings(state, t, bound):
    return BranchState(state.g, state.k, state.f, t, state.norm, depth=state.depth,
                       k0=state.k0, bound=bound, telemetry=state.telemetry,
                       cache=state.cache)


def min_kcut(state, cfg=None, seed=None):
    """A superset of the minimum k-cuts that are (F, s, k)-valid.

    A partition is (F, s, k)-valid exactly when F crosses it at most s
    times, and the recursion only follows partitions crossed exactly s
    times, so every crossing count t in [k - kappa(F), s] gets its own
    search.  Only the lightest partitions found are returned.  An
    unsatisfiable budget (s larger than the forest) gives the empty set.
    """
    if cfg is None:
        cfg = ScheduleConfig()
    cfg.validate()
    if state.f.vertices != state.g.vertices:
        raise GraphError("forest and graph disagree on the vertex set")
    if state.s < 0 or state.budget < state.k:
        raise InvalidBudget("s + kappa(F) = {} < k = {}".format(state.budget, state.k))
    if state.s > len(state.f.edges):
        return frozenset()
    rng = get_rng(seed)
    bound = state.bound
    found = {}
    for t in range(max(0, state.k - state.f.component_count), state.s + 1):
        result = _search(_at_crossings(state, t, bound), cfg, rng)
        if result:
            weight = min(result.values())
            bound = weight if bound is None else min(bound, weight)
            found.update(result)
    return frozenset(_keep_minimum(found))


def _entropy(seed):
    if seed is None:
        return int(numpy.random.SeedSequence().entropy)
    return int(seed)


def _run_tree(work, cache=None):
    g, k, tree, s, opt_upper, bound, cfg, entropy = work
    telemetry = Telemetry()
    telemetry.runs = 1
    state = BranchState(g, k, tree, s, NormContext(opt_upper, k), k0=k, bound=bound,
                        telemetry=telemetry, cache=cache)
    return _search(state, cfg, get_rng(entropy)), telemetry


def enumerate_min_kcuts(g, k, cfg=None, seed=None, telemetry=None, cores=1, trees=None):
    """Every minimum k-cut of ``g`` as canonical Partitions.

    ``opt_upper`` starts from a short contraction warm start and follows the
    best weight found; with ``cores`` > 1 the (tree, s) runs go to a process
    pool and share only that warm-start bound.
    """
    if cfg is None:
        cfg = ScheduleConfig()
    cfg.validate()
    if k < 1:
        raise ValueError("k must be positive, got {}".format(k))
    n = g.vertex_count
    if n < k:
        raise TooFewVertices("{} vertices cannot form {} parts".format(n, k))
    if k == 1:
        return frozenset([Partition([g.vertices])])
    if n == k:
        return frozenset([Partition(VertexSet(1 << v, g.n) for v in g.vertices)])
    kappa = g.component_count
    if kappa >= k:
        return frozenset(component_groupings(g, k))
    if kappa > 1:
        raise Disconnected("{} components but only {} parts".format(kappa, k))
    if telemetry is None:
        telemetry = Telemetry()
    entropy = _entropy(seed)
    warm = karger_stein_min_kcut(g, k, get_rng([entropy]), cfg,
                                 repetitions=cfg.warm_start_rounds)
    best = partition_weight(g, next(iter(warm)))
    found = dict.fromkeys(warm, best)
    count = trees if trees is not None else pack_size_for(k, g.m, cfg)
    packed = distinct_trees(greedy_tree_pack(g, count))
    telemetry.trees += len(packed)
    budgets = range(k - 1, min(2 * k - 2, n - 1) + 1)
    if cores > 1:
        work = [(g, k, tree, s, best, best, cfg, [entropy, idx, s])
                for idx, tree in enumerate(packed) for s in budgets]
        with multiprocessing.Pool(cores) as pool:
            results = pool.map(_run_tree, work)
    else:
        cache = {}
        results = []
        for idx, tree in enumerate(packed):
            for s in budgets:
                result = _run_tree((g, k, tree, s, best, best, cfg, [entropy, idx, s]), cache)
                if result[0]:
                    best = min(best, min(result[0].values()))
                results.append(result)
    for result, run_telemetry in results:
        found.update(result)
        telemetry.merge(run_telemetry)
    return frozenset(_keep_minimum(found))
