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
# Name:        asymptotic.py
# Purpose:     Asymptotic ridge density of a scar
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Large quantum number form of the scar density.

Summing the shell in the stationary-phase approximation leaves Gaussian ridges of angular width Delta_phi that
follow the classical chords. On the circle of radius r a chord is seen at angles m_k +/- beta(r), where m_k is the
chord's point of tangency with the caustic and cos(beta(r)) = l0 R / (rho_bar r). Each ridge contributes
exp(-(phi - ridge)^2 / Delta_phi^2).

The optional radial envelope is the Debye amplitude of J_l(kr) squared, ~ 1/sqrt(r^2 - r_c^2), normalized to 1 at
the wall and clipped over the Airy transition layer next to the caustic.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
import math
from typing import Optional

import numpy as np

from ..orbits.classical import caustic_radius_of
from ..spectrum.billiard import SpectrumDomainError
from ..spectrum.shell import Shell

_logger = logging.getLogger("scarlib.Asymptotic")

__all__ = [
    "caustic_angle",
    "natural_orbit_phase",
    "ridge_angles",
    "radial_envelope",
    "asymptotic_density",
]


def natural_orbit_phase(shell: Shell) -> float:
    """
    Wall angle pi p / q of the first orbit vertex of a packet with real positive coefficients.
    The chords of that orbit touch the caustic at the angles 2 pi m / q.
    """
    return math.pi * shell.p / shell.q


def caustic_angle(shell: Shell, r):
    """
    beta(r) = arccos(l0 R / (rho_bar r)) on the allowed annulus [r_c, R].

    :raises SpectrumDomainError: for radii inside the caustic or beyond the wall
    """
    scalar = np.ndim(r) == 0
    r_arr = np.asarray(r, dtype=float)
    r_c = caustic_radius_of(shell)
    radius = shell.config.radius
    if r_arr.size and (r_arr.min() < r_c * (1.0 - 1e-12) or r_arr.max() > radius * (1.0 + 1e-12)):
        raise SpectrumDomainError(f"Radius must be within the allowed annulus [{r_c}, {radius}]")
    with np.errstate(divide="ignore"):
        ratio = np.where(r_arr > 0.0, r_c / np.where(r_arr > 0.0, r_arr, 1.0), 0.0)
    beta = np.arccos(np.clip(ratio, -1.0, 1.0))
    return float(beta) if scalar else beta


def ridge_angles(shell: Shell, r: float, phi0: Optional[float] = None) -> np.ndarray:
    """The 2q ridge angles m_k - beta(r), m_k + beta(r) at radius r, mod 2 pi."""
    phi0 = natural_orbit_phase(shell) if phi0 is None else phi0
    beta = caustic_angle(shell, r)
    p, q = shell.p, shell.q
    angles = []
    for k in range(q):
        tangent = phi0 + math.pi * p * (2 * k + 1) / q
        angles.extend([tangent - beta, tangent + beta])
    return np.mod(np.array(angles), 2.0 * math.pi)


def radial_envelope(shell: Shell, r):
    """sqrt((R^2 - r_c^2) / (r^2 - r_c^2)), with r^2 - r_c^2 clipped at the Airy layer width."""
    radius = shell.config.radius
    r_c = caustic_radius_of(shell)
    rho_bar = shell.rho_bar
    floor = max(2.0 * r_c * radius * shell.l0 ** (1.0 / 3.0) / rho_bar, (radius / rho_bar) ** 2)
    r_arr = np.asarray(r, dtype=float)
    return np.sqrt((radius ** 2 - r_c ** 2) / np.maximum(r_arr * r_arr - r_c * r_c, floor))


def asymptotic_density(shell: Shell, delta_phi: float, r, phi, phi0: Optional[float] = None,
                       envelope: bool = False):
    """
    Ridge density at (r, phi), summed over the q chords and both crossings of each chord with the circle of
    radius r. A point on one isolated ridge has value 1 (without envelope).

    :param shell: shell fixing l0, rho_bar and (p, q)
    :type shell: Shell
    :param delta_phi: angular ridge width
    :type delta_phi: float
    :param r: radius or radii
    :param phi: angle(s), broadcast against r
    :param phi0: wall angle of the first orbit vertex, :func:`natural_orbit_phase` when omitted
    :type phi0: float
    :param envelope: multiply by :func:`radial_envelope`
    :type envelope: bool
    :return: the density, 0 inside the caustic
    """
    scalar = np.ndim(r) == 0 and np.ndim(phi) == 0
    r_arr, phi_arr = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(phi, dtype=float))
    radius = shell.config.radius
    if r_arr.size and (r_arr.min() < 0.0 or r_arr.max() > radius * (1.0 + 1e-12)):
        raise SpectrumDomainError(f"Radius must be within [0, {radius}]")
    phi0 = natural_orbit_phase(shell) if phi0 is None else phi0
    r_c = caustic_radius_of(shell)
    allowed = r_arr >= r_c
    beta = np.zeros(r_arr.shape)
    if np.any(allowed):
        beta[allowed] = caustic_angle(shell, np.minimum(r_arr[allowed], radius))

    _logger.debug("Ridge density of shell (%d, %d) at %d points, caustic r = %.4f, envelope %s",
                  shell.p, shell.q, r_arr.size, r_c, "on" if envelope else "off")
    p, q = shell.p, shell.q
    width2 = delta_phi * delta_phi
    density = np.zeros(r_arr.shape)
    for k in range(q):
        tangent = phi0 + math.pi * p * (2 * k + 1) / q
        for ridge in (tangent - beta, tangent + beta):
            theta = np.mod(phi_arr - ridge + math.pi, 2.0 * math.pi) - math.pi
            density += np.exp(-theta * theta / width2)
    if envelope:
        density *= radial_envelope(shell, r_arr)
    density = np.where(allowed, density, 0.0)
    return float(density) if scalar else density
