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
# Name:        billiard.py
# Purpose:     Exact spectrum of the circular billiard
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Eigenmodes of a particle in a hard-wall disk of radius R.

The mode (n, l) has the wavefunction J_l(rho_nl r / R) exp(i l phi), where rho_nl is the n-th positive zero of J_l,
wavenumber k = rho / R and energy E = hbar^2 k^2 / (2 M). Only l >= 0 is enumerated.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
import math
from dataclasses import dataclass
from typing import List

from ..special.bessel import MAX_ORDER
from ..special.bessel_zeros import BesselRangeError, bessel_zero, first_zero_lower_bound, scan_zeros

_logger = logging.getLogger("scarlib.Spectrum")

__all__ = [
    "SpectrumDomainError",
    "BilliardConfig",
    "EigenMode",
    "eigen_mode",
    "enumerate_modes",
    "MAX_CUTOFF",
    "weyl_count",
    "semiclassical_residual",
    "mean_level_density",
    "mean_level_spacing",
]

WEYL_TOLERANCE = 0.10
WEYL_MIN_STATES = 50  # below this the two-term estimate is too rough to compare against
# largest k_max * R whose modes all have orders within the Bessel table
MAX_CUTOFF = first_zero_lower_bound(MAX_ORDER + 1)


class SpectrumDomainError(ValueError):
    """Invalid billiard parameters or a mode outside the domain of an operation."""
    pass


@dataclass(frozen=True)
class BilliardConfig:
    """
    Physical constants of the billiard. All three default to 1, which is the unit system every comparison with
    published figures uses.

    :param radius: disk radius R
    :param mass: particle mass M
    :param hbar: reduced Planck constant
    """
    radius: float = 1.0
    mass: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("radius", "mass", "hbar"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise SpectrumDomainError(f"BilliardConfig.{name} must be a finite positive number, got {value!r}")

    def wavenumber(self, rho: float) -> float:
        return rho / self.radius

    def energy(self, rho: float) -> float:
        """Energy of a mode whose dimensionless zero is rho."""
        k = rho / self.radius
        return self.hbar ** 2 * k * k / (2.0 * self.mass)


@dataclass(frozen=True)
class EigenMode:
    """
    One exact eigenstate.

    :param n: radial quantum number, the 1-based index of the Bessel zero
    :param l: angular momentum, l >= 0
    :param rho: the zero rho_nl of J_l
    :param k: wavenumber rho / R
    :param energy: hbar^2 k^2 / (2 M)
    """
    n: int
    l: int
    rho: float
    k: float
    energy: float

    @classmethod
    def from_zero(cls, n: int, l: int, rho: float, config: BilliardConfig) -> "EigenMode":
        return cls(n=int(n), l=int(l), rho=float(rho), k=config.wavenumber(rho), energy=config.energy(rho))


def eigen_mode(config: BilliardConfig, l: int, n: int) -> EigenMode:
    """Builds the mode (n, l) from the n-th zero of J_l."""
    return EigenMode.from_zero(n, l, bessel_zero(l, n), config)


def weyl_count(config: BilliardConfig, k: float) -> float:
    """
    Two-term Weyl estimate (kR)^2/4 - kR/2 of the number of Dirichlet states with wavenumber below k,
    counting l and -l separately.
    """
    kr = k * config.radius
    return kr * kr / 4.0 - kr / 2.0


def enumerate_modes(config: BilliardConfig, k_max: float) -> List[EigenMode]:
    """
    Every mode with rho_nl <= k_max * R and l >= 0, sorted by energy.

    Cut-offs with k_max * R above MAX_CUTOFF (about 527.9) need orders beyond MAX_ORDER = 512 and raise
    BesselRangeError before any zero is searched. Scale the radius down to reach higher in k.

    The mode count (with l > 0 counted twice for the -l partner) is compared with :func:`weyl_count`; a
    disagreement above 10% is logged as a warning.

    :param config: billiard constants
    :type config: BilliardConfig
    :param k_max: wavenumber cut-off
    :type k_max: float
    :return: the modes, ascending energy, ties ordered by l
    :rtype: list[EigenMode]
    :raises BesselRangeError: when the cut-off is beyond the supported zero range
    """
    rho_max = k_max * config.radius
    if rho_max <= 0:
        return []
    orders = []
    l = 0
    while first_zero_lower_bound(l) < rho_max:
        orders.append(l)
        l += 1
    if orders and orders[-1] > MAX_ORDER:
        raise BesselRangeError(f"Modes up to rho = {rho_max} need orders beyond {MAX_ORDER} "
                               f"(cut-off limit {MAX_CUTOFF:.1f})")
    zeros = scan_zeros(orders, rho_max)
    modes = [EigenMode.from_zero(n + 1, l, rho, config)
             for l in orders
             for n, rho in enumerate(zeros[l])]
    modes.sort(key=lambda mode: (mode.rho, mode.l))

    states = sum(1 if mode.l == 0 else 2 for mode in modes)
    estimate = weyl_count(config, k_max)
    if estimate >= WEYL_MIN_STATES and abs(states - estimate) > WEYL_TOLERANCE * estimate:
        _logger.warning("Found %d states below k = %g, Weyl estimate is %.1f", states, k_max, estimate)
    _logger.debug("Enumerated %d modes (%d states) below k = %g", len(modes), states, k_max)
    return modes


def semiclassical_residual(mode: EigenMode) -> float:
    """
    Bohr-Sommerfeld residual sqrt(rho^2 - l^2) - l*arccos(l/rho) - (2(n-1)+1)*pi/2 - pi/4.
    The quantization integer of the rule is the zero index minus one.

    :raises SpectrumDomainError: when rho <= l (no classically allowed radial motion)
    """
    rho = mode.rho
    l = mode.l
    if rho <= l:
        raise SpectrumDomainError(f"Residual needs rho > l, got rho={rho}, l={l}")
    return (math.sqrt(rho * rho - l * l) - l * math.acos(l / rho)
            - (2 * (mode.n - 1) + 1) * math.pi / 2 - math.pi / 4)


def mean_level_density(config: BilliardConfig) -> float:
    """
    Mean level density 2 pi M R^2 / hbar^2 (states per unit energy).
    The two-term Weyl law gives M R^2 / (2 hbar^2) for the same quantity; this is the form the lifetime
    analysis is compared against.
    """
    return 2.0 * math.pi * config.mass * config.radius ** 2 / config.hbar ** 2


def mean_level_spacing(config: BilliardConfig) -> float:
    """Reciprocal of :func:`mean_level_density`."""
    return 1.0 / mean_level_density(config)
