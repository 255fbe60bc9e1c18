# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 03 March 2026 08:55 CET (+0100)

Schedule arithmetic for the branching enumeration: the forest budget
z(k, s), the line g_{k,s} through the centroid (4, 2s/k), the branching
cost d(w), the gain ratio and the potential Phi.

All quantities are in normalized units, where the optimal k-cut has total
normalized weight 2k.  Everything except the potential (which involves a
logarithm) is evaluated exactly with Fractions.
"""

import math
from fractions import Fraction
from collections import namedtuple

import numpy

from kcut.errors import ConfigError, InvalidBudget

SEVEN_QUARTERS = Fraction(7, 4)
NINTH = Fraction(1, 9)


_ScheduleBase = namedtuple(
    "_ScheduleBase",
    "gamma,c_z,c_b,base_k,cap_const,c_rep,c_pack,warm_start_rounds,exhaustive_cutover"
)


class ScheduleConfig(_ScheduleBase):
    """gamma and every constant hidden behind a Theta(.) in the schedule.

    ``budget_slack`` (c_z * gamma) is the Theta(gamma) term of z(k, s) and
    also the loss in the potential's (1 - Theta(gamma)) factor;
    ``base_cutoff`` is the Theta(1/gamma) base-case threshold, overridable
    through ``base_k``.
    """

    __slots__ = ()

    def __new__(cls, gamma=Fraction(1, 20), c_z=10, c_b=1, base_k=None, cap_const=4,
                c_rep=3, c_pack=1, warm_start_rounds=16, exhaustive_cutover=True):
        try:
            return super(ScheduleConfig, cls).__new__(
                cls,
                Fraction(gamma),
                Fraction(c_z),
                Fraction(c_b),
                None if base_k is None else int(base_k),
                int(cap_const),
                Fraction(c_rep),
                Fraction(c_pack),
                int(warm_start_rounds),
                bool(exhaustive_cutover),
            )
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise ConfigError("bad schedule value: {}".format(e))

    @property
    def budget_slack(self):
        return self.c_z * self.gamma

    @property
    def theta(self):
        return 1 - self.c_z * self.gamma

    @property
    def base_cutoff(self):
        if self.base_k is not None:
            return self.base_k
        return int(math.ceil(self.c_b / self.gamma))

    def replace(self, **kwargs):
        fields = self._asdict()
        fields.update(kwargs)
        return ScheduleConfig(**fields)

    def validate(self):
        if not 0 < self.gamma <= Fraction(1, 10):
            raise ConfigError("gamma must lie in (0, 1/10], got {}".format(self.gamma))
        if self.budget_slack < 0:
            raise ConfigError("budget slack must be nonnegative")
        if self.base_cutoff < 2:
            raise ConfigError("base_k must be at least 2, got {}".format(self.base_cutoff))
        if self.cap_const < 1 or self.c_rep <= 0 or self.c_pack <= 0:
            raise ConfigError("cap_const, c_rep and c_pack must be positive")
        if self.warm_start_rounds < 1:
            raise ConfigError("warm_start_rounds must be positive")
        return self


def budget_z(k, s, cfg):
    return s - (SEVEN_QUARTERS + cfg.budget_slack) * k


def _line(k, s, cfg):
    r = Fraction(s, k)
    scale = 1 + cfg.gamma
    slope = (2 * r - 2) / scale
    intercept = 8 / scale + r * (2 - 8 / scale)
    return slope, intercept


def line_g(k, s, cfg, w):
    slope, intercept = _line(k, s, cfg)
    return slope * Fraction(w) + intercept


def beta_ell(k, s, cfg, ell):
    if s <= k:
        raise InvalidBudget("the line g_{{k,s}} needs s > k (k={}, s={})".format(k, s))
    slope, intercept = _line(k, s, cfg)
    return (Fraction(ell) - intercept) / slope


def branch_cap_d(w, cfg):
    w = Fraction(w)
    if w <= 3 - cfg.gamma:
        return Fraction(1)
    if w <= 4 - cfg.gamma:
        return Fraction(11, 4)
    if w <= Fraction(14, 3) - cfg.gamma:
        return Fraction(15, 4)
    return w


def gain_ratio(w, ell, cfg):
    """(ell - d(w)) / (ell - 1.75 - slack); the gain per unit of z spent"""
    ell = Fraction(ell)
    return (ell - branch_cap_d(w, cfg)) / (ell - SEVEN_QUARTERS - cfg.budget_slack)


def gain_bound(k, s, k0, cfg):
    z = budget_z(k, s, cfg)
    if z < 0:
        raise InvalidBudget("gain bound needs z(k, s) >= 0 (k={}, s={})".format(k, s))
    return min(NINTH, 4 * z / (Fraction(13, 2) * z + Fraction(39, 8) * k0) * cfg.theta)


def line_witness(points, k, s, cfg):
    """Index of the first (w, ell) point on or above g_{k,s}, else None"""
    for idx, (w, ell) in enumerate(points):
        if ell >= line_g(k, s, cfg, w):
            return idx
    return None


def breakpoint(k0, cfg):
    """Where the potential integrand reaches its 1/9 ceiling (inf if never)"""
    rho = float(cfg.theta)
    if 36.0 * rho <= 6.5:
        return float("inf")
    return 4.875 * k0 / (36.0 * rho - 6.5)


def potential_integrand(t, k0, cfg):
    rho = float(cfg.theta)
    return numpy.minimum(1.0 / 9.0, 4.0 * t / (6.5 * t + 4.875 * k0) * rho)


def _x_minus_log1p(x):
    if x < 1e-4:
        return x * x / 2.0 - x ** 3 / 3.0 + x ** 4 / 4.0 - x ** 5 / 5.0
    return x - math.log1p(x)


def potential_phi(k, s, k0, cfg):
    z = budget_z(k, s, cfg)
    if z < 0:
        return 1.0
    z = float(z)
    rho = float(cfg.theta)
    c = 4.875 * k0
    scale = c / 6.5
    top = min(z, breakpoint(k0, cfg))
    # integral of 4 rho t / (6.5 t + c) over [0, top]
    phi = (4.0 * rho / 6.5) * scale * _x_minus_log1p(top / scale)
    if z > top:
        phi += (z - top) / 9.0
    return phi


def potential_phi_quadrature(k, s, k0, cfg, nodes=48, pieces=4):
    z = budget_z(k, s, cfg)
    if z < 0:
        return 1.0
    z = float(z)
    x, weights = numpy.polynomial.legendre.leggauss(nodes)
    edges = numpy.linspace(0.0, min(z, breakpoint(k0, cfg)), pieces + 1)
    bounds = list(zip(edges[:-1], edges[1:]))
    if z > edges[-1]:
        bounds.append((edges[-1], z))
    total = 0.0
    for a, b in bounds:
        half = (b - a) / 2.0
        t = half * x + (a + b) / 2.0
        total += half * float(numpy.sum(weights * potential_integrand(t, k0, cfg)))
    return total


def potential_rate(k0, cfg):
    """Phi(k0, 2k0 - 2) / k0, the saving in the exponent per part"""
    return potential_phi(k0, 2 * k0 - 2, k0, cfg) / k0


def runtime_exponent(k0, cfg):
    return 2.0 - potential_rate(k0, cfg)
