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
# Name:        lifetime.py
# Purpose:     Energy spread and lifetime of a scar packet
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Energy spread and lifetime estimates of a packet.

The spread is the exact weighted standard deviation of the member energies. The quantal lifetime hbar/Delta_E is compared
with the classical time T = M R^2 / (hbar rho_bar), and the relative spread with (Delta_l / rho_bar)^2 to give the
order-unity factor g.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
import math
from dataclasses import asdict, dataclass

import numpy as np

from ..spectrum.billiard import mean_level_density
from ..spectrum.shell import curvature_estimate
from .packet import ScarPacket

_logger = logging.getLogger("scarlib.Lifetime")

__all__ = ["LifetimeReport", "classical_time", "lifetime_report"]


@dataclass(frozen=True)
class LifetimeReport:
    """
    Lifetime figures of one packet. ``ratio`` is ``tau_q / t_classical``; an exactly degenerate shell gives
    delta_e = 0 and infinite tau_q and ratio.
    """
    e_mean: float
    delta_e: float
    tau_q: float
    t_classical: float
    ratio: float
    g_factor: float
    eq5_estimate: float
    delta_e_over_spacing: float
    curvature_delta_e_over_e: float

    def to_dict(self) -> dict:
        return asdict(self)


def classical_time(packet: ScarPacket) -> float:
    """T = M R^2 / (hbar rho_bar)."""
    config = packet.config
    return config.mass * config.radius ** 2 / (config.hbar * packet.shell.rho_bar)


def _curvature_spread(packet: ScarPacket) -> float:
    """Relative spread |k''| / k * Delta_l^2 from the curvature along the shell, NaN when it cannot be taken."""
    shell = packet.shell
    if not (math.isfinite(packet.delta_l) and packet.delta_l > 0) or shell.n0 - shell.p < 1 or shell.l0 - shell.q < 0:
        return math.nan
    k0 = shell.rho_bar / shell.config.radius
    return abs(curvature_estimate(shell)) / k0 * packet.delta_l ** 2


def lifetime_report(packet: ScarPacket) -> LifetimeReport:
    """
    Computes the :class:`LifetimeReport` of a packet.

    :param packet: the packet
    :type packet: ScarPacket
    :return: the report
    :rtype: LifetimeReport
    """
    config = packet.config
    weights = packet.weights
    energies = packet.energies
    e_mean = float(np.sum(weights * energies))
    delta_e = float(math.sqrt(max(0.0, np.sum(weights * (energies - e_mean) ** 2))))
    t_classical = classical_time(packet)
    rho_bar = packet.shell.rho_bar
    if delta_e > 0.0:
        tau_q = config.hbar / delta_e
        ratio = tau_q / t_classical
    else:
        _logger.warning("Packet energies are exactly degenerate, lifetime is unbounded")
        tau_q = math.inf
        ratio = math.inf
    if math.isfinite(packet.delta_l) and packet.delta_l > 0:
        g_factor = (delta_e / e_mean) / (packet.delta_l / rho_bar) ** 2
    else:
        g_factor = math.nan
    report = LifetimeReport(
        e_mean=e_mean,
        delta_e=delta_e,
        tau_q=tau_q,
        t_classical=t_classical,
        ratio=ratio,
        g_factor=g_factor,
        eq5_estimate=packet.delta_phi ** 2 * packet.shell.l0,
        delta_e_over_spacing=delta_e * mean_level_density(config),
        curvature_delta_e_over_e=_curvature_spread(packet),
    )
    _logger.info("tau_q/T = %.3f, g = %.3f, Delta_phi^2 l0 = %.3f", report.ratio, report.g_factor,
                 report.eq5_estimate)
    return report
