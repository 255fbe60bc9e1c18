# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 08 March 2026 15:40 CET (+0100)
"""

import numpy


def get_stats(values):
    """total, mean, 95% CI, min and max of a list of numbers"""
    values = numpy.array(values, dtype=float)
    if len(values) == 0:
        return 0.0, 0.0, 0.0, 0.0, 0.0
    total = numpy.sum(values)
    mean = numpy.mean(values)
    if len(values) > 1:
        ci = 1.96 * (numpy.std(values, ddof=1) / numpy.sqrt(len(values)))
    else:
        ci = 0.0
    return total, mean, ci, numpy.min(values), numpy.max(values)


def log_enum_summary(log, g, k, weight, partitions):
    text = " Enumeration summary "
    log.info(text.center(65, "-"))
    log.info("[Graph] vertices:\t{:,}".format(g.vertex_count))
    log.info("[Graph] edges:\t\t{:,}".format(g.m))
    log.info("[Graph] weight:\t\t{:,}".format(g.total_weight))
    log.info("[Cuts] k:\t\t{}".format(k))
    log.info("[Cuts] optimum:\t\t{:,}".format(weight))
    log.info("[Cuts] count:\t\t{:,}".format(len(partitions)))


def log_telemetry_summary(log, telemetry):
    text = " Search summary "
    log.info(text.center(65, "-"))
    log.info("[Search] trees:\t\t{:,}".format(telemetry.trees))
    log.info("[Search] runs:\t\t{:,}".format(telemetry.runs))
    for depth in telemetry.depths():
        phi = telemetry.phi.get(depth)
        log.info("[Depth {}] calls {:,}, branches {:,}, brute force {:,}, base {:,}{}".format(
            depth,
            telemetry.calls[depth],
            telemetry.branches[depth],
            telemetry.brute_force[depth],
            telemetry.base_cases[depth],
            ", max phi {:.4f}".format(max(phi)) if phi else "",
        ))
    for ell in sorted(telemetry.family_sizes):
        log.info("[Family {}] candidates:\t{:,}".format(ell, telemetry.family_sizes[ell]))


def log_census_summary(log, rows):
    text = " Small-cut census "
    log.info(text.center(65, "-"))
    for n, k, beta, count, cap in rows:
        log.info("[beta {:.4f}] {:,} sides (cap {:,})".format(float(beta), count, cap))


def log_bench_summary(log, family, rows):
    total, mean, ci, low, high = get_stats([row.seconds for row in rows])
    text = " Benchmark summary: {} ".format(family)
    log.info(text.center(65, "-"))
    log.info("[Time] runs:\t\t{:,}".format(len(rows)))
    log.info("[Time] total:\t\t{:.3f} s".format(total))
    log.info("[Time] mean:\t\t{:.3f} s".format(mean))
    log.info("[Time] 95% CI:\t\t{:.3f} s".format(ci))
    log.info("[Time] min:\t\t{:.3f} s".format(low))
    log.info("[Time] max:\t\t{:.3f} s".format(high))


def log_verify_summary(log, results):
    text = " Verification summary "
    log.info(text.center(65, "-"))
    for name, violations in results:
        status = "ok" if not violations else "{:,} violations".format(len(violations))
        log.info("[{}]\t{}".format(name, status))
        for violation in violations[:10]:
            log.warning("[{}] {}".format(name, violation))
