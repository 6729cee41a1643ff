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
# Name:        packet.py
# Purpose:     Gaussian scar wave packets built over a shell
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Scar wave packets.

A packet superposes the orthonormal modes of one shell,

    psi(r, phi) = sum_j c_j N_j J_{l_j}(k_j r) exp(i l_j phi) / sqrt(2 pi),    N_j = sqrt(2) / (R |J_{l_j+1}(rho_j)|)

with a Gaussian angular-momentum distribution |c_j|^2 ~ exp(-(l_j - l0)^2 / (2 Delta_l^2)) and Delta_l = 1/Delta_phi.
The coefficients are real and positive.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..special.bessel import bessel_j
from ..spectrum.billiard import BilliardConfig, SpectrumDomainError
from ..spectrum.shell import Shell

_logger = logging.getLogger("scarlib.ScarPacket")

__all__ = [
    "DegeneratePacketError",
    "ScarPacket",
    "gaussian_weights",
    "build_packet",
    "central_state",
    "packet_amplitude",
    "packet_density",
    "angular_spread",
]

ANGULAR_SAMPLES = 720


class DegeneratePacketError(ValueError):
    """Every Gaussian weight but the central one underflowed."""
    pass


@dataclass(frozen=True, eq=False)
class ScarPacket:
    """
    Normalized packet over a shell.

    :param shell: the shell whose members are superposed
    :param delta_phi: angular width, Delta_phi = 1 / Delta_l
    :param coeffs: complex coefficients aligned with ``shell.members``
    """
    shell: Shell
    delta_phi: float
    coeffs: np.ndarray

    @property
    def config(self) -> BilliardConfig:
        return self.shell.config

    @property
    def delta_l(self) -> float:
        return 1.0 / self.delta_phi

    @property
    def weights(self) -> np.ndarray:
        """Occupation probabilities |c_j|^2."""
        return np.abs(self.coeffs) ** 2

    @property
    def participation_ratio(self) -> float:
        """1 / sum |c_j|^4, the effective number of modes in the packet."""
        return float(1.0 / np.sum(self.weights ** 2))

    @cached_property
    def orders(self) -> np.ndarray:
        return np.array([mode.l for mode in self.shell.members], dtype=np.int64)

    @cached_property
    def rhos(self) -> np.ndarray:
        return np.array([mode.rho for mode in self.shell.members])

    @cached_property
    def energies(self) -> np.ndarray:
        return np.array([mode.energy for mode in self.shell.members])

    @cached_property
    def radial_norms(self) -> np.ndarray:
        """N_j = sqrt(2) / (R |J_{l_j+1}(rho_j)|)."""
        return math.sqrt(2.0) / (self.config.radius * np.abs(bessel_j(self.orders + 1, self.rhos)))


def gaussian_weights(shell: Shell, delta_phi: float) -> np.ndarray:
    """Unnormalized weights exp(-(l_j - l0)^2 / (2 Delta_l^2)), Delta_l = 1 / delta_phi."""
    delta_l = 1.0 / delta_phi
    dl = np.array([mode.l - shell.l0 for mode in shell.members], dtype=float)
    return np.exp(-dl * dl / (2.0 * delta_l * delta_l))


def build_packet(shell: Shell, delta_phi: float) -> ScarPacket:
    """
    Builds the Gaussian packet of angular width ``delta_phi`` over ``shell``.
    The Gaussian weights are the occupation probabilities, so c_j = sqrt(w_j / sum(w)).

    :param shell: shell with at least two members
    :type shell: Shell
    :param delta_phi: angular width in radians, within (0, 1]
    :type delta_phi: float
    :return: the normalized packet
    :rtype: ScarPacket
    :raises DegeneratePacketError: when only the central weight survives
    :raises SpectrumDomainError: for an out of range width or a single-member shell
    """
    if not 0.0 < delta_phi <= 1.0:
        raise SpectrumDomainError(f"Angular width must be within (0, 1], got {delta_phi}")
    if len(shell) < 2:
        raise SpectrumDomainError("A packet needs a shell with at least two members, see central_state()")
    weights = gaussian_weights(shell, delta_phi)
    if np.count_nonzero(weights > 0.0) < 2:
        raise DegeneratePacketError(f"Angular width {delta_phi} leaves a single non-zero weight")
    coeffs = np.sqrt(weights / weights.sum()).astype(complex)
    packet = ScarPacket(shell=shell, delta_phi=float(delta_phi), coeffs=coeffs)
    _logger.info("Packet over %d modes, delta_phi=%.4f, participation ratio %.2f",
                 len(shell), delta_phi, packet.participation_ratio)
    return packet


def central_state(shell: Shell) -> ScarPacket:
    """Packet made of the central member alone. Its density is rotationally invariant."""
    single = shell.subset(1)
    return ScarPacket(shell=single, delta_phi=math.inf, coeffs=np.ones(1, dtype=complex))


def _check_radius(packet: ScarPacket, r: np.ndarray) -> None:
    radius = packet.config.radius
    if r.size and (r.min() < 0.0 or r.max() > radius * (1.0 + 1e-12)):
        raise SpectrumDomainError(f"Radius must be within [0, {radius}]")


def packet_amplitude(packet: ScarPacket, r, phi):
    """
    Wavefunction of the packet at polar coordinates (r, phi).

    :param packet: the packet
    :type packet: ScarPacket
    :param r: radius or radii within [0, R]
    :param phi: angle(s), broadcast against r
    :return: complex amplitude, a Python complex for scalar input
    :raises SpectrumDomainError: when a radius is outside [0, R]
    """
    scalar = np.ndim(r) == 0 and np.ndim(phi) == 0
    r_arr, phi_arr = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(phi, dtype=float))
    _check_radius(packet, r_arr)
    radius = packet.config.radius
    x_scaled = np.minimum(r_arr / radius, 1.0)
    total = np.zeros(r_arr.shape, dtype=complex)
    for c, norm, l, rho in zip(packet.coeffs, packet.radial_norms, packet.orders, packet.rhos):
        radial = bessel_j(int(l), rho * x_scaled)
        total += (c * norm) * radial * np.exp(1j * l * phi_arr)
    total /= math.sqrt(2.0 * math.pi)
    return complex(total) if scalar else total


def packet_density(packet: ScarPacket, r, phi):
    """Probability density |psi|^2 of the packet."""
    amplitude = packet_amplitude(packet, r, phi)
    return abs(amplitude) ** 2 if np.ndim(amplitude) == 0 else np.abs(amplitude) ** 2


def angular_spread(packet: ScarPacket, r: float, samples: int = ANGULAR_SAMPLES) -> float:
    """
    Circular standard deviation of the angular marginal of |psi|^2 on the circle of radius r, folded by the
    q-fold symmetry of the shell: sqrt(-2 ln |<exp(i q phi)>|) / q.
    """
    q = packet.shell.q
    phi = 2.0 * math.pi * np.arange(samples) / samples
    density = packet_density(packet, np.full(samples, float(r)), phi)
    total = density.sum()
    if total <= 0.0:
        return math.inf
    resultant = abs(np.sum(density * np.exp(1j * q * phi))) / total
    if resultant <= 0.0:
        return math.inf
    return math.sqrt(max(0.0, -2.0 * math.log(min(1.0, resultant)))) / q
