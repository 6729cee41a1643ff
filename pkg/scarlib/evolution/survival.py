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
# Name:        survival.py
# Purpose:     Survival probability of a packet under exact time evolution
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Time evolution of a packet in the exact spectrum.

Modes are orthonormal, so the overlap of the evolved packet with its initial state needs no spatial quadrature:

    C(t) = | sum_j |c_j|^2 exp(-i E_j t / hbar) |^2

The numerical lifetime is the first time C drops to the threshold (1/e by default).
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..scar.lifetime import classical_time, lifetime_report
from ..scar.packet import ScarPacket

_logger = logging.getLogger("scarlib.Survival")

__all__ = [
    "SurvivalCurve",
    "ConsistencyReport",
    "survival",
    "survival_curve",
    "lifetime_consistency",
    "LIFETIME_THRESHOLD",
]

LIFETIME_THRESHOLD = math.exp(-1.0)
DEFAULT_STEPS = 2048
DEFAULT_SPAN = 40.0  # in units of the classical time
CONSISTENCY_BAND = (0.5, 2.0)


@dataclass(frozen=True, eq=False)
class SurvivalCurve:
    """
    Sampled survival probability.

    :param times: sample times in units of the classical time T
    :param values: C(t) at each sample
    :param tau_numeric: first threshold crossing, units of T, ``inf`` when never crossed
    """
    times: np.ndarray
    values: np.ndarray
    tau_numeric: float


@dataclass(frozen=True)
class ConsistencyReport:
    """Numerical and variance lifetimes of one packet (both in time units) and their ratio."""
    tau_numeric: float
    tau_q: float
    ratio_of_estimates: float
    consistent: bool


def _survival(packet: ScarPacket, t: np.ndarray) -> np.ndarray:
    weights = packet.weights
    energies = packet.energies
    shifted = energies - np.sum(weights * energies)
    phases = np.multiply.outer(t, shifted) / packet.config.hbar
    overlap = np.exp(-1j * phases) @ weights
    return np.clip(np.abs(overlap) ** 2, 0.0, 1.0)


def survival(packet: ScarPacket, t: float) -> float:
    """
    Survival probability C(t) at time t (same time unit as hbar / E).

    :param packet: the packet
    :type packet: ScarPacket
    :param t: time; negative times give C(-t) = C(t)
    :type t: float
    :return: C(t) within [0, 1]
    :rtype: float
    """
    return float(_survival(packet, np.asarray([float(t)]))[0])


def _first_crossing(times: np.ndarray, values: np.ndarray, threshold: float) -> float:
    below = np.nonzero(values <= threshold)[0]
    if below.size == 0:
        return math.inf
    i = int(below[0])
    if i == 0:
        return float(times[0])
    t0, t1 = times[i - 1], times[i]
    c0, c1 = values[i - 1], values[i]
    return float(t0 + (c0 - threshold) * (t1 - t0) / (c0 - c1))


def survival_curve(packet: ScarPacket, t_max: float, steps: int = DEFAULT_STEPS,
                   threshold: float = LIFETIME_THRESHOLD) -> SurvivalCurve:
    """
    Samples C(t) uniformly on [0, t_max].

    :param packet: the packet
    :type packet: ScarPacket
    :param t_max: end of the time window, in time units
    :type t_max: float
    :param steps: number of samples, at least 2
    :type steps: int
    :param threshold: survival level that defines the numerical lifetime
    :type threshold: float
    :return: curve with times and lifetime in units of the classical time
    :rtype: SurvivalCurve
    """
    if t_max <= 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    if steps < 2:
        raise ValueError(f"At least 2 samples are needed, got {steps}")
    t_classical = classical_time(packet)
    times = np.linspace(0.0, t_max, int(steps))
    values = _survival(packet, times)
    scaled = times / t_classical
    tau = _first_crossing(scaled, values, threshold)
    if math.isinf(tau):
        _logger.info("Survival stays above %.3f up to t = %.2f T", threshold, scaled[-1])
    return SurvivalCurve(times=scaled, values=values, tau_numeric=tau)


def lifetime_consistency(packet: ScarPacket, t_max: Optional[float] = None, steps: int = DEFAULT_STEPS,
                         threshold: float = LIFETIME_THRESHOLD) -> ConsistencyReport:
    """
    Compares the survival lifetime with hbar / Delta_E.

    :param packet: the packet
    :type packet: ScarPacket
    :param t_max: time window, 40 T when omitted
    :type t_max: float
    :return: both lifetimes, their ratio and whether the ratio lies within [0.5, 2]
    :rtype: ConsistencyReport
    """
    t_classical = classical_time(packet)
    if t_max is None:
        t_max = DEFAULT_SPAN * t_classical
    curve = survival_curve(packet, t_max, steps, threshold)
    tau_numeric = curve.tau_numeric * t_classical
    tau_q = lifetime_report(packet).tau_q
    if math.isinf(tau_numeric) and math.isinf(tau_q):
        ratio = 1.0
    elif math.isinf(tau_q):
        ratio = 0.0
    else:
        ratio = tau_numeric / tau_q
    consistent = CONSISTENCY_BAND[0] <= ratio <= CONSISTENCY_BAND[1]
    if not consistent:
        _logger.warning("Survival lifetime %.4g and hbar/Delta_E %.4g disagree (ratio %.3f)", tau_numeric, tau_q,
                        ratio)
    return ConsistencyReport(tau_numeric=tau_numeric, tau_q=tau_q, ratio_of_estimates=ratio, consistent=consistent)
