#!/usr/bin/env python
# coding=utf-8

# -------------------------------------------------------------------------------
#
#  ███████╗ ██████╗ █████╗ ██████╗ ██╗     ██╗██████╗
#  ██╔════╝██╔════╝██╔══██╗██╔══██╗██║     ██║██╔══██╗
#  ███████╗██║     ███████║██████╔╝██║     ██║██████╔╝
#  ╚════██║██║     ██╔══██║██╔══██╗██║     ██║██╔══██╗
#  ███████║╚██████╗██║  ██║██║  ██║███████╗██║██████╔╝
#  ╚══════╝ ╚═════╝╚═╝  ╚═╝╚═╝  ╚═╝╚══════╝╚═╝╚═════╝
#
# Name:        bessel_zeros.py
# Purpose:     Positive zeros of the integer order Bessel functions
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Positive zeros of J_l(x).

Zeros are bracketed by a uniform sign-change scan that starts at x = l (J_l is positive up to its first zero, which
lies beyond l) and advances in steps of pi/4. Consecutive zeros are always more than pi apart, so no bracket can hold
two of them. Every bracket is then refined with a safeguarded Newton iteration that falls back to bisection whenever
the Newton step leaves the bracket.

Scans for many orders are done in one vectorized batch (see :func:`scan_zeros`).
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
import math
from functools import lru_cache
from typing import Dict, Iterable, List

import numpy as np

from .bessel import MAX_ARGUMENT, MAX_ORDER, BesselDomainError, bessel_j, bessel_triplet

_logger = logging.getLogger("scarlib.BesselZeros")

__all__ = [
    "SCAN_STEP",
    "BesselRangeError",
    "bessel_zero",
    "bessel_zeros_upto",
    "scan_zeros",
    "first_zero_lower_bound",
]

SCAN_STEP = math.pi / 4
NEWTON_TOLERANCE = 1e-13
NEWTON_MAX_ITER = 100


class BesselRangeError(BesselDomainError):
    """The requested zero lies beyond the supported argument range."""
    pass


def first_zero_lower_bound(l: int) -> float:
    """Lower bound l + 1.8557 * l**(1/3) of the first positive zero of J_l (l >= 0)."""
    return l + 1.8557571 * l ** (1.0 / 3.0)


def _refine(orders: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Safeguarded Newton on a batch of brackets [a, b] holding exactly one sign change each.
    Each element stops on its own, so the result of an element does not depend on the rest of the batch.
    """
    if a.size == 0:
        return a.copy()
    a = a.copy()
    b = b.copy()
    fa = bessel_j(orders, a)
    x = 0.5 * (a + b)
    active = np.ones(a.shape, dtype=bool)
    iterations = 0
    while iterations < NEWTON_MAX_ITER and np.any(active):
        iterations += 1
        idx = np.nonzero(active)[0]
        lo, val, hi = bessel_triplet(orders[idx], x[idx])
        deriv = np.where(orders[idx] == 0, -hi, 0.5 * (lo - hi))
        xi = x[idx]
        ai = a[idx]
        bi = b[idx]
        same = (val > 0) == (fa[idx] > 0)
        ai = np.where(same, xi, ai)
        fa[idx] = np.where(same, val, fa[idx])
        bi = np.where(same, bi, xi)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = xi - val / deriv
        inside = np.isfinite(newton) & (newton > ai) & (newton < bi)
        x_new = np.where(inside, newton, 0.5 * (ai + bi))
        x_new = np.where(val == 0.0, xi, x_new)
        done = np.abs(x_new - xi) <= NEWTON_TOLERANCE * np.maximum(1.0, xi)
        a[idx] = ai
        b[idx] = bi
        x[idx] = x_new
        active[idx[done]] = False
    if np.any(active):
        _logger.warning("%d zero(s) did not reach the Newton tolerance", int(np.count_nonzero(active)))
    _logger.debug("Refined %d zero(s) in %d iteration(s)", a.size, iterations)
    return x


def scan_zeros(orders: Iterable[int], x_max: float, step: float = SCAN_STEP) -> Dict[int, np.ndarray]:
    """
    Finds every positive zero in (0, x_max] for several orders at once.

    :param orders: orders to scan, each within [0, 512]
    :type orders: iterable of int
    :param x_max: upper end of the search interval, at most 1024
    :type x_max: float
    :param step: scan step. Must stay below pi for the scan to be exhaustive.
    :type step: float
    :return: mapping order -> ascending array of zeros
    :rtype: dict
    :raises BesselRangeError: when x_max exceeds the supported argument range
    """
    order_list = sorted(set(int(l) for l in orders))
    if x_max > MAX_ARGUMENT:
        raise BesselRangeError(f"Zeros beyond x = {MAX_ARGUMENT} are not supported")
    if not 0.0 < step < math.pi:
        raise ValueError("Scan step must be within (0, pi)")
    for l in order_list:
        if l < 0 or l > MAX_ORDER:
            raise BesselDomainError(f"Order must be within [0, {MAX_ORDER}]")

    result = {l: np.empty(0) for l in order_list}
    grid_orders = []
    grid_points = []
    for l in order_list:
        if x_max <= l:
            continue
        points = l + step * np.arange(int(math.ceil((x_max - l) / step)))
        points = np.append(points, x_max)
        grid_points.append(points)
        grid_orders.append(np.full(points.size, l, dtype=np.int64))
    if not grid_points:
        return result

    xs = np.concatenate(grid_points)
    ls = np.concatenate(grid_orders)
    positive = bessel_j(ls, xs) > 0.0
    change = (positive[:-1] != positive[1:]) & (ls[:-1] == ls[1:])
    left = np.nonzero(change)[0]
    zeros = _refine(ls[left], xs[left], xs[left + 1])
    zeros = np.minimum(zeros, xs[left + 1])
    _logger.debug("Scanned %d point(s) over %d order(s), %d zero(s) found", xs.size, len(order_list), zeros.size)

    bracket_orders = ls[left]
    for l in order_list:
        result[l] = zeros[bracket_orders == l]
    return result


def bessel_zeros_upto(l: int, x_max: float, step: float = SCAN_STEP) -> List[float]:
    """
    Every positive zero of J_l in (0, x_max], ascending.

    :param l: order within [0, 512]
    :type l: int
    :param x_max: upper end of the search interval, at most 1024
    :type x_max: float
    :param step: scan step, pi/4 by default
    :type step: float
    :return: the zeros, ascending and without duplicates
    :rtype: list[float]
    :raises BesselRangeError: when x_max exceeds the supported argument range
    """
    return [float(z) for z in scan_zeros([l], x_max, step)[int(l)]]


@lru_cache(maxsize=4096)
def _zero(l: int, n: int) -> float:
    x_max = min(MAX_ARGUMENT, (n + 0.5 * l + 1.0) * math.pi)
    while True:
        zeros = bessel_zeros_upto(l, x_max)
        if len(zeros) >= n:
            return zeros[n - 1]
        if x_max >= MAX_ARGUMENT:
            raise BesselRangeError(f"Zero #{n} of J_{l} lies beyond x = {MAX_ARGUMENT}")
        x_max = min(MAX_ARGUMENT, x_max + n * math.pi)


def bessel_zero(l: int, n: int) -> float:
    """
    The n-th positive zero of J_l, n counted from 1.

    :param l: order within [0, 512]
    :type l: int
    :param n: 1-based zero index
    :type n: int
    :return: the zero
    :rtype: float
    :raises BesselRangeError: when the zero is beyond x = 1024
    :raises BesselDomainError: for an invalid order or index
    """
    if int(n) != n or n < 1:
        raise BesselDomainError("Zero index must be a positive integer")
    if int(l) != l or l < 0 or l > MAX_ORDER:
        raise BesselDomainError(f"Order must be an integer within [0, {MAX_ORDER}]")
    return _zero(int(l), int(n))
