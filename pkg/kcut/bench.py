# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 09 March 2026 16:25 CET (+0100)
"""

import time
from collections import namedtuple

from kcut.graph import partition_weight
from kcut.contraction import get_rng
from kcut.minkcut import Telemetry, enumerate_min_kcuts
from kcut import generators

BenchRow = namedtuple("BenchRow", "family,n,k,repeat,seconds,weight,count,trees,calls")

FAMILIES = ("cycle", "random", "planted")


def make_instance(family, n, k, rng):
    if family == "cycle":
        return generators.cycle(n)
    if family == "random":
        return generators.random_connected(n, rng)
    if family == "planted":
        return generators.planted(n, k, rng)
    raise ValueError("unknown benchmark family {!r}".format(family))


def run_benchmark(log, family, n, k, repeats=3, seed=0, cfg=None, cores=1):
    """Time ``repeats`` enumerations on fresh seeded instances"""
    rows = []
    for repeat in range(repeats):
        rng = get_rng([seed, repeat])
        g = make_instance(family, n, k, rng)
        telemetry = Telemetry()
        start_time = time.time()
        found = enumerate_min_kcuts(g, k, cfg, seed=seed + repeat, telemetry=telemetry,
                                    cores=cores)
        elapsed = time.time() - start_time
        weight = partition_weight(g, next(iter(found)))
        log.info("[{} n={} k={}] run {}: {:.3f} s, optimum {}, {:,} cuts".format(
            family, n, k, repeat + 1, elapsed, weight, len(found)))
        rows.append(BenchRow(family, n, k, repeat, elapsed, weight, len(found),
                             telemetry.trees, sum(telemetry.calls.values())))
    return rows


def format_bench_table(rows):
    lines = ["\t".join(BenchRow._fields)]
    for row in rows:
        lines.append("\t".join(
            "{:.4f}".format(value) if isinstance(value, float) else str(value) for value in row))
    return "\n".join(lines) + "\n"
