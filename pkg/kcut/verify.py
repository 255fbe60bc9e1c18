# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 09 March 2026 09:05 CET (+0100)

Property checks on built-in instances.  Every ``check_*`` takes the logger
first and returns a list of violation strings (empty when the property
holds); ``quick`` shrinks the instance counts for smoke runs.
"""

import math
import multiprocessing
from fractions import Fraction

from kcut.graph import partition_weight
from kcut.contraction import enum_small_cuts, get_rng
from kcut.schedule import (
    ScheduleConfig,
    budget_z,
    line_g,
    beta_ell,
    branch_cap_d,
    gain_ratio,
    gain_bound,
    line_witness,
    potential_phi,
    potential_phi_quadrature,
    potential_rate,
    runtime_exponent,
)
from kcut.treepack import greedy_tree_pack, pack_size_for, tree_crossing
from kcut.setsys import RangeSpace, crosses, find_crossing_pair, find_triple, dual_vc_dimension, all_subsets
from kcut.minkcut import enumerate_min_kcuts
from kcut.oracle import brute_min_kcuts, brute_cut_census
from kcut import generators

POTENTIAL_RATE = 0.0192055688
GRID_CONFIG = ScheduleConfig(gamma=Fraction(1, 100), c_z=10)
ORACLE_CONFIG = ScheduleConfig(gamma=Fraction(1, 20), base_k=2)
# every part found by the Karger-Stein base case, without exact scans
CONTRACTION_CONFIG = ScheduleConfig(gamma=Fraction(1, 20), exhaustive_cutover=False)
NO_CUTOVER = ScheduleConfig(exhaustive_cutover=False)


def instance_dump(g):
    return "n={} edges={}".format(g.n, list(g.edges))


def oracle_instance(seed, idx, top=7, ks=(2, 3, 4)):
    """The idx-th seeded random instance: n in 4..top, weights 1..5, k cycling through ks"""
    rng = get_rng([seed, idx])
    n = int(rng.integers(4, top + 1))
    g = generators.random_connected(n, rng, p=0.35)
    k = min(ks[idx % len(ks)], n - 1)
    return g, k


def _oracle_case(work):
    seed, idx, factors, cfg, top, ks = work
    g, k = oracle_instance(seed, idx, top, ks)
    found = enumerate_min_kcuts(g, k, cfg, seed=seed + idx)
    problems = []
    if factors is None:
        weight, expected = brute_min_kcuts(g, k)
        if found != expected:
            problems.append("instance {} (k={}): {} cuts found, {} expected; {}".format(
                idx, k, len(found), len(expected), instance_dump(g)))
    else:
        for factor in factors:
            scaled = enumerate_min_kcuts(generators.scaled(g, factor), k, cfg,
                                         seed=seed + idx)
            if scaled != found:
                problems.append("instance {} (k={}) changes under scaling by {}; {}".format(
                    idx, k, factor, instance_dump(g)))
    return problems


def _run_cases(work, cores):
    if cores > 1:
        with multiprocessing.Pool(cores) as pool:
            results = pool.map(_oracle_case, work)
    else:
        results = map(_oracle_case, work)
    return [problem for problems in results for problem in problems]


def check_oracle_equivalence(log, seed=0, cores=1, quick=False):
    count = 12 if quick else 100
    log.info("Comparing enumeration against brute force on {} random graphs".format(count))
    work = [(seed, idx, None, ORACLE_CONFIG, 7, (2, 3, 4)) for idx in range(count)]
    return _run_cases(work, cores)


def check_contraction_oracle(log, seed=0, cores=1, quick=False):
    """Oracle comparison with the minimum k-cuts drawn by contraction, never by exact scans"""
    count = 3 if quick else 15
    log.info("Comparing contraction-only enumeration against brute force on {} "
             "random graphs".format(count))
    work = [(seed, idx, None, CONTRACTION_CONFIG, 6, (2, 3)) for idx in range(count)]
    return _run_cases(work, cores)


def check_scale_invariance(log, seed=0, cores=1, quick=False, factors=(2, 7, 1000)):
    count = 6 if quick else 100
    log.info("Scaling {} random graphs by {}".format(count, ", ".join(str(f) for f in factors)))
    work = [(seed, idx, tuple(factors), ORACLE_CONFIG, 7, (2, 3, 4)) for idx in range(count)]
    return _run_cases(work, cores)


def check_cycle_closed_form(log, seed=0, quick=False):
    violations = []
    top = 8 if quick else 12
    log.info("Counting minimum k-cuts of cycles C_5..C_{}".format(top))
    for n in range(5, top + 1):
        g = generators.cycle(n)
        for k in (2, 3, 4):
            found = enumerate_min_kcuts(g, k, seed=seed + n)
            weights = set(partition_weight(g, p) for p in found)
            if weights != {k} or len(found) != math.comb(n, k):
                violations.append("C_{} k={}: {} cuts of weights {}, expected {} of weight {}".format(
                    n, k, len(found), sorted(weights), math.comb(n, k), k))
    return violations


def potential_samples(rng, count):
    """(k, s, k0) with a nonnegative budget z(k, s), where the potential is not flat"""
    for _ in range(count):
        k0 = int(rng.integers(2, 1000))
        k = int(rng.integers(2, k0 + 1))
        low = int(math.ceil((Fraction(7, 4) + GRID_CONFIG.budget_slack) * k))
        yield k, int(rng.integers(low, 2 * k + 1)), k0


def check_potential_constant(log, seed=0, quick=False):
    violations = []
    limit = ScheduleConfig(gamma=0)
    rate = potential_rate(10 ** 6, limit)
    exponent = runtime_exponent(10 ** 6, limit)
    log.info("Potential rate at k0=10^6: {:.10f}, exponent {:.7f}".format(rate, exponent))
    if abs(rate - POTENTIAL_RATE) > 1e-6:
        violations.append("potential rate {:.10f} differs from {}".format(rate, POTENTIAL_RATE))
    if exponent > 1.981:
        violations.append("runtime exponent {:.7f} exceeds 1.981".format(exponent))
    rng = get_rng([seed, 3])
    for k, s, k0 in potential_samples(rng, 100 if quick else 1000):
        closed = potential_phi(k, s, k0, GRID_CONFIG)
        numeric = potential_phi_quadrature(k, s, k0, GRID_CONFIG)
        if abs(closed - numeric) > 1e-9 * max(abs(closed), 1e-300):
            violations.append("Phi({}, {}; k0={}) closed form {!r} vs quadrature {!r}".format(
                k, s, k0, closed, numeric))
    return violations


def _grid(top):
    for k in range(2, top + 1):
        for s in range(int(math.ceil(Fraction(7, 4) * k)), 2 * k + 1):
            if budget_z(k, s, GRID_CONFIG) >= 0:
                yield k, s


def check_potential_grid(log, quick=False, top=None, tolerance=1e-9):
    """The five potential inequalities on the (k, s) grid with k0 = k"""
    cfg = GRID_CONFIG
    top = top or (40 if quick else 200)
    log.info("Checking the potential inequalities for k <= {}".format(top))
    violations = []

    def phi(k, s, k0):
        return potential_phi(k, s, k0, cfg)

    for k, s in _grid(top):
        here = phi(k, s, k)
        if here > s + tolerance:
            violations.append("item 1 at k={}, s={}".format(k, s))
        if here > phi(k, s - 1, k) + 1 + tolerance:
            violations.append("item 2 at k={}, s={}".format(k, s))
        if here > min(phi(k - 1, s, k), phi(k - 1, s - 1, k)) + tolerance:
            violations.append("item 3 at k={}, s={}".format(k, s))
        for ell in range(2, s + 1):
            w = beta_ell(k, s, cfg, ell)
            bound = phi(k - 1, s - ell, k) + ell - float(branch_cap_d(w, cfg))
            if here > bound + tolerance:
                violations.append("item 4 at k={}, s={}, l={}".format(k, s, ell))
        if float(beta_ell(k, s, cfg, s)) > s - here + 3 + tolerance:
            violations.append("item 5 at k={}, s={}".format(k, s))
    return violations


def check_gain_grid(log, quick=False, top=None):
    cfg = GRID_CONFIG
    top = top or (40 if quick else 200)
    log.info("Checking the gain ratio bound for k <= {}".format(top))
    violations = []
    grid = [Fraction(i, 4) for i in range(0, 33)] + [
        3 - cfg.gamma, 4 - cfg.gamma, Fraction(14, 3) - cfg.gamma]
    for k, s in _grid(top):
        floor = gain_bound(k, s, k, cfg)
        points = list(grid) + [beta_ell(k, s, cfg, ell) for ell in range(2, s + 1)]
        for w in points:
            ell = max(2, int(math.ceil(line_g(k, s, cfg, w))))
            if ell > s:
                continue
            if gain_ratio(w, ell, cfg) < floor:
                violations.append("k={}, s={}, w={}, l={}".format(k, s, w, ell))
    return violations


def random_line_points(rng, k, s):
    """k points (w, l) with sum w = 4k, sum l = 2s and every l >= 2"""
    raw = [int(x) + 1 for x in rng.integers(0, 100, size=k)]
    total = sum(raw)
    ws = [Fraction(4 * k * x, total) for x in raw]
    ls = [2] * k
    for _ in range(2 * s - 2 * k):
        ls[int(rng.integers(0, k))] += 1
    return list(zip(ws, ls))


def check_line_witness(log, seed=0, quick=False):
    cfg = GRID_CONFIG
    rng = get_rng([seed, 4])
    violations = []
    trials = 100 if quick else 1000
    for _ in range(trials):
        k = int(rng.integers(2, 30))
        s = int(rng.integers(k + 1, 2 * k + 1))
        points = random_line_points(rng, k, s)
        if line_witness(points, k, s, cfg) is None:
            violations.append("no point above the line for k={}, s={}: {}".format(k, s, points))
    return violations


def check_small_cut_cap(log, seed=0, quick=False):
    violations = []
    rng = get_rng([seed, 6])
    count = 10 if quick else 50
    randomized = 5 if quick else 20
    top = 8 if quick else 12
    log.info("Checking small-cut counts on {} random graphs".format(count))
    for idx in range(count):
        n = int(rng.integers(4, top + 1))
        g = generators.random_connected(n, rng, p=0.4)
        for h in (2, 3):
            optimum, _ = brute_min_kcuts(g, h)
            for alpha in (Fraction(1), Fraction(3, 2), Fraction(2)):
                limit = alpha * optimum / h
                census = brute_cut_census(g, lambda w: w <= limit)
                cap = 2 ** h * n ** (2 * float(alpha))
                if len(census) > cap:
                    violations.append("instance {}: {} sides exceed the cap {:.0f}".format(
                        idx, len(census), cap))
                configs = [("scan", None)]
                if idx < randomized and n <= 8 and alpha < 2:
                    configs.append(("contraction", NO_CUTOVER))
                for how, cfg in configs:
                    found = set(r.set for r in enum_small_cuts(g, h, alpha, cfg, seed=rng))
                    missing = [a for a in census if a not in found]
                    if missing:
                        violations.append(
                            "instance {} h={} alpha={} ({}): {} sides missed; {}".format(
                                idx, h, alpha, how, len(missing), instance_dump(g)))
    return violations


def _random_ranges(rng, n, count):
    masks = [int(x) for x in rng.permutation(1 << n)[:count]]
    return RangeSpace.from_masks(n, masks)


def co_singletons(n):
    full = (1 << n) - 1
    masks = [0, full] + [1 << i for i in range(n)] + [full ^ (1 << i) for i in range(n)]
    return RangeSpace.from_masks(n, masks)


def check_crossing_pairs(log, seed=0, quick=False):
    violations = []
    rng = get_rng([seed, 7])
    trials = 40 if quick else 200
    for trial in range(trials):
        n = int(rng.integers(4, 17))
        rs = _random_ranges(rng, n, 4 * n - 3)
        pair = find_crossing_pair(rs)
        if pair is None or not crosses(*pair):
            violations.append("trial {}: no verified crossing pair among {} ranges over [{}]".format(
                trial, len(rs), n))
    for n in range(4, 17):
        if find_crossing_pair(co_singletons(n)) is not None:
            violations.append("co-singleton family over [{}] reported a crossing".format(n))
    return violations


def check_venn_triples(log, quick=False):
    violations = []
    triples = all_subsets(10, size=3)
    if find_triple(triples, 8) is not None:
        violations.append("3-subsets of [10] have an 8-cell triple")
    if dual_vc_dimension(triples) != 2:
        violations.append("3-subsets of [10] have dual VC dimension {}".format(
            dual_vc_dimension(triples)))
    if find_triple(all_subsets(8), 8) is None:
        violations.append("the power set of [8] has no 8-cell triple")
    return violations


def check_tree_packing(log, seed=0, quick=False, rate=Fraction(99, 100)):
    rng = get_rng([seed, 9])
    count = 10 if quick else 50
    failures = []
    for idx in range(count):
        n = int(rng.integers(4, 11))
        g = generators.random_connected(n, rng, p=0.4)
        k = (2, 3)[idx % 2]
        _, optima = brute_min_kcuts(g, k)
        trees = greedy_tree_pack(g, pack_size_for(k, g.m, ScheduleConfig()))
        best = min(tree_crossing(t, p) for t in trees for p in optima)
        if best > 2 * k - 2:
            log.warning("No tree crosses an optimal {}-cut <= {} times: {}".format(
                k, 2 * k - 2, instance_dump(g)))
            failures.append("instance {} (k={}) best crossing {}".format(idx, k, best))
    if len(failures) > (1 - rate) * count:
        return failures
    return []


CHECKS = (
    "oracle_equivalence",
    "contraction_oracle",
    "cycle_closed_form",
    "potential_constant",
    "potential_grid",
    "gain_grid",
    "line_witness",
    "small_cut_cap",
    "crossing_pairs",
    "venn_triples",
    "tree_packing",
    "scale_invariance",
)


def run_suite(log, seed=0, cores=1, quick=False):
    """Run every check; returns [(name, violations)]"""
    results = []
    for name in CHECKS:
        text = " {} ".format(name)
        log.info(text.center(65, "-"))
        check = globals()["check_{}".format(name)]
        if name in ("oracle_equivalence", "contraction_oracle", "scale_invariance"):
            violations = check(log, seed=seed, cores=cores, quick=quick)
        elif name in ("potential_grid", "gain_grid", "venn_triples"):
            violations = check(log, quick=quick)
        else:
            violations = check(log, seed=seed, quick=quick)
        results.append((name, violations))
    return results
