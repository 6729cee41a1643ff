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
# Name:        bessel.py
# Purpose:     Cylindrical Bessel functions of the first kind, integer order
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Values and derivatives of the Bessel functions J_l(x) for integer orders 0 <= l <= 512 and real arguments
0 <= x <= 1024.

Small arguments (x < 1) are summed from the power series. Everything else goes through a normalized downward
(Miller) recurrence, which stays stable on both sides of the turning point x = l. The start order of the recurrence
is computed per element from (l, x) only, so the result of an element never depends on the other elements of the
array it was evaluated with.

All functions accept scalars or array-likes and broadcast like numpy ufuncs. Scalars in, float out.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

_logger = logging.getLogger("scarlib.Bessel")

__all__ = [
    "MAX_ORDER",
    "MAX_ARGUMENT",
    "BesselDomainError",
    "BesselEval",
    "bessel_j",
    "bessel_j_prime",
    "bessel_triplet",
    "bessel_eval",
]

MAX_ORDER = 512
MAX_ARGUMENT = 1024.0

SERIES_LIMIT = 1.0  # arguments below this are summed from the power series
SERIES_TERMS = 24
RESCALE = 1.0e250
SEED = 1.0e-30

ArrayLike = Union[int, float, np.ndarray, list, tuple]

# log(k!) for every k the power series can touch
_LOG_FACTORIAL = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1, MAX_ORDER + SERIES_TERMS + 3)))))


class BesselDomainError(ValueError):
    """Order or argument outside the supported range."""
    pass


@dataclass(frozen=True)
class BesselEval:
    """One evaluation of J_l at a point, with its first derivative."""
    order: int
    argument: float
    value: float
    derivative: float


def _check_domain(l: ArrayLike, x: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    l_arr = np.asarray(l)
    x_arr = np.asarray(x, dtype=float)
    if l_arr.dtype.kind not in "iu":
        if l_arr.dtype.kind != "f" or np.any(l_arr != np.floor(l_arr)):
            raise BesselDomainError("Only integer orders are supported")
    l_arr = l_arr.astype(np.int64)
    if l_arr.size and (l_arr.min() < 0 or l_arr.max() > MAX_ORDER):
        raise BesselDomainError(f"Order must be within [0, {MAX_ORDER}]")
    if x_arr.size:
        if not np.all(np.isfinite(x_arr)):
            raise BesselDomainError("Argument must be finite")
        if x_arr.min() < 0.0:
            raise BesselDomainError("Negative arguments are not supported")
        if x_arr.max() > MAX_ARGUMENT:
            raise BesselDomainError(f"Argument must not exceed {MAX_ARGUMENT}")
    return np.broadcast_arrays(l_arr, x_arr)


def _series(orders: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Power series of J_l(x). Exact at x = 0, accurate to rounding for x < 1."""
    result = np.where(orders == 0, 1.0, 0.0)
    positive = x > 0.0
    if not np.any(positive):
        return result
    l_pos = orders[positive]
    log_half = np.log(0.5 * x[positive])
    total = np.zeros_like(log_half)
    for k in range(SERIES_TERMS):
        log_term = (2 * k + l_pos) * log_half - _LOG_FACTORIAL[k] - _LOG_FACTORIAL[k + l_pos]
        term = np.exp(log_term)
        total += -term if k % 2 else term
    result[positive] = total
    return result


def _start_order(orders: np.ndarray, x: np.ndarray) -> np.ndarray:
    top = np.maximum(orders.astype(float), x)
    start = np.floor(top).astype(np.int64) + np.floor(np.sqrt(40.0 * top)).astype(np.int64) + 16
    return 2 * ((start + 1) // 2)


def _miller(orders: np.ndarray, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Normalized downward recurrence. Returns J_{l-1}, J_l and J_{l+1} (J_{-1} is returned as -J_1).
    The normalization uses J_0 + 2 * sum(J_2k) = 1.
    """
    start = _start_order(orders, x)
    starts = set(np.unique(start).tolist())
    uniform = orders.size > 0 and orders.min() == orders.max()
    l_single = int(orders.flat[0]) if uniform else -1

    j_next = np.zeros_like(x)
    j_cur = np.zeros_like(x)
    norm = np.zeros_like(x)
    lo = np.zeros_like(x)
    mid = np.zeros_like(x)
    hi = np.zeros_like(x)
    two_over_x = 2.0 / x

    for k in range(int(start.max()), 0, -1):
        if k in starts:
            j_cur = np.where(start == k, SEED, j_cur)
        j_prev = k * two_over_x * j_cur - j_next
        m = k - 1
        if uniform:
            if m == l_single + 1:
                hi = j_prev.copy()
            elif m == l_single:
                mid = j_prev.copy()
            elif m == l_single - 1:
                lo = j_prev.copy()
        else:
            hi = np.where(orders + 1 == m, j_prev, hi)
            mid = np.where(orders == m, j_prev, mid)
            lo = np.where(orders - 1 == m, j_prev, lo)
        if m == 0:
            norm += j_prev
        elif m % 2 == 0:
            norm += 2.0 * j_prev
        big = np.abs(j_prev) > RESCALE
        if np.any(big):
            scale = np.where(big, 1.0 / RESCALE, 1.0)
            j_prev *= scale
            j_cur *= scale
            norm *= scale
            lo *= scale
            mid *= scale
            hi *= scale
        j_next = j_cur
        j_cur = j_prev

    lo = np.where(orders == 0, -hi, lo)
    return lo / norm, mid / norm, hi / norm


def _triplet(orders: np.ndarray, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    lo = np.empty_like(x)
    mid = np.empty_like(x)
    hi = np.empty_like(x)
    small = x < SERIES_LIMIT
    if np.any(small):
        l_small = orders[small]
        x_small = x[small]
        mid[small] = _series(l_small, x_small)
        hi[small] = _series(l_small + 1, x_small)
        lo_small = _series(np.maximum(l_small - 1, 0), x_small)
        lo[small] = np.where(l_small == 0, -hi[small], lo_small)
    if not np.all(small):
        large = ~small
        lo[large], mid[large], hi[large] = _miller(orders[large], x[large])
    return lo, mid, hi


def _unwrap(value: np.ndarray, scalar: bool):
    return float(value) if scalar else value


def bessel_triplet(l: ArrayLike, x: ArrayLike) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Evaluates J_{l-1}(x), J_l(x) and J_{l+1}(x) in one pass.

    :param l: order(s), integers within [0, 512]
    :param x: argument(s) within [0, 1024]
    :return: three arrays shaped like the broadcast of l and x. For l = 0 the first one holds -J_1(x).
    :raises BesselDomainError: when an order or argument is out of range
    """
    orders, args = _check_domain(l, x)
    orders = np.ascontiguousarray(orders).reshape(-1)
    args = np.ascontiguousarray(args, dtype=float).reshape(-1)
    shape = np.broadcast(np.asarray(l), np.asarray(x)).shape
    lo, mid, hi = _triplet(orders, args)
    return lo.reshape(shape), mid.reshape(shape), hi.reshape(shape)


def bessel_j(l: ArrayLike, x: ArrayLike):
    """
    Bessel function of the first kind J_l(x).

    :param l: integer order, 0 <= l <= 512
    :type l: int or array-like
    :param x: argument, 0 <= x <= 1024
    :type x: float or array-like
    :return: J_l(x), a float when both inputs are scalars
    :raises BesselDomainError: when an order or argument is out of range
    """
    scalar = np.ndim(l) == 0 and np.ndim(x) == 0
    _, mid, _ = bessel_triplet(l, x)
    return _unwrap(mid, scalar)


def bessel_j_prime(l: ArrayLike, x: ArrayLike):
    """
    First derivative dJ_l/dx, from J_l' = (J_{l-1} - J_{l+1}) / 2 and J_0' = -J_1.

    :param l: integer order, 0 <= l <= 512
    :param x: argument, 0 <= x <= 1024
    :return: J_l'(x), a float when both inputs are scalars
    :raises BesselDomainError: when an order or argument is out of range
    """
    scalar = np.ndim(l) == 0 and np.ndim(x) == 0
    lo, _, hi = bessel_triplet(l, x)
    return _unwrap(0.5 * (lo - hi), scalar)


def bessel_eval(l: int, x: float) -> BesselEval:
    """Evaluates J_l and J_l' at a single point."""
    lo, mid, hi = bessel_triplet(l, x)
    return BesselEval(order=int(l), argument=float(x), value=float(mid), derivative=float(0.5 * (lo - hi)))
