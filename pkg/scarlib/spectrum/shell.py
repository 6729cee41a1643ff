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
# Name:        shell.py
# Purpose:     Approximately degenerate shells tied to closed orbits
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Energy shells.

Along the direction (dn, dl) = (-p, q) of the (n, l) lattice the zeros rho_nl are stationary, so the modes
(n0 - j p, l0 + j q) for j = -J .. J have nearly the same energy. Such a set is a :class:`Shell`; its members carry
the classical (p, q) orbit with chord half-angle beta0 = pi p / q, and l0 / rho_bar is close to cos(beta0).
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..orbits.classical import check_winding
from ..special.bessel import MAX_ORDER
from ..special.bessel_zeros import bessel_zero, bessel_zeros_upto
from .billiard import BilliardConfig, EigenMode, SpectrumDomainError, eigen_mode

_logger = logging.getLogger("scarlib.Shell")

__all__ = [
    "ShellNotFoundError",
    "Shell",
    "find_shell",
    "shell_spread",
    "relative_spread",
    "family_spread",
    "curvature_estimate",
    "DEGENERACY_THRESHOLD",
]

DEGENERACY_THRESHOLD = 0.01
SEARCH_WINDOW = 2


class ShellNotFoundError(LookupError):
    """No shell around the hint meets the degeneracy threshold."""
    pass


@dataclass(frozen=True)
class Shell:
    """
    A (p, q) family of modes around (n0, l0): l_j = l0 + j q, n_j = n0 - j p.

    :param p: winding number
    :param q: number of wall bounces, q > p, gcd(p, q) = 1
    :param l0: central angular momentum
    :param n0: central radial number
    :param members: modes ordered by increasing l
    :param config: billiard constants the members were built with
    """
    p: int
    q: int
    l0: int
    n0: int
    members: Tuple[EigenMode, ...]
    config: BilliardConfig = BilliardConfig()

    def __post_init__(self):
        check_winding(self.p, self.q)
        if not self.members:
            raise SpectrumDomainError("A shell needs at least one member")
        for mode in self.members:
            if (mode.l - self.l0) % self.q != 0:
                raise SpectrumDomainError(f"Member l={mode.l} is not on the l0 + j*q lattice")
            j = (mode.l - self.l0) // self.q
            if mode.n != self.n0 - j * self.p:
                raise SpectrumDomainError(f"Member (n={mode.n}, l={mode.l}) breaks the shell's linear relation")

    @property
    def beta0(self) -> float:
        """Chord half-angle pi p / q."""
        return math.pi * self.p / self.q

    @property
    def rho_bar(self) -> float:
        return float(np.mean([mode.rho for mode in self.members]))

    @property
    def offsets(self) -> List[int]:
        """Family index j of every member."""
        return [(mode.l - self.l0) // self.q for mode in self.members]

    @property
    def half_width(self) -> int:
        return max(abs(j) for j in self.offsets)

    def __len__(self):
        return len(self.members)

    def subset(self, count: int) -> "Shell":
        """
        The ``count`` members closest to l0 (ties broken towards negative j), kept in l order.
        Seven members with count 6 drop j = +J.
        """
        if not 1 <= count <= len(self.members):
            raise ValueError(f"Member count must be within [1, {len(self.members)}], got {count}")
        ranked = sorted(zip(self.offsets, self.members), key=lambda item: (abs(item[0]), item[0]))[:count]
        kept = tuple(mode for _, mode in sorted(ranked, key=lambda item: item[0]))
        return Shell(self.p, self.q, self.l0, self.n0, kept, self.config)


def _family(config: BilliardConfig, l0: int, n0: int, dl: int, dn: int, half_width: int) -> Optional[List[EigenMode]]:
    members = []
    for j in range(-half_width, half_width + 1):
        l = l0 + j * dl
        n = n0 + j * dn
        if l < 0 or l > MAX_ORDER or n < 1:
            return None
        members.append(eigen_mode(config, l, n))
    return members


def _spread(rhos: List[float]) -> float:
    mean = float(np.mean(rhos))
    return float(np.max(np.abs(np.asarray(rhos) - mean)))


def shell_spread(shell: Shell) -> float:
    """Largest deviation max_j |rho_j - rho_bar| of the member zeros from their mean."""
    return _spread([mode.rho for mode in shell.members])


def relative_spread(shell: Shell) -> float:
    return shell_spread(shell) / shell.rho_bar


def family_spread(shell: Shell, dl: int, dn: int) -> float:
    """
    Spread max_j |rho_j - mean| of the family (l0 + j dl, n0 + j dn) over the same offsets as the shell.
    With (dl, dn) = (q, -p) this is :func:`shell_spread`; any other slope leaves the stationary direction.
    """
    rhos = []
    for j in shell.offsets:
        l = shell.l0 + j * dl
        n = shell.n0 + j * dn
        if l < 0 or n < 1:
            raise SpectrumDomainError(f"Family member (n={n}, l={l}) does not exist")
        rhos.append(bessel_zero(l, n))
    return _spread(rhos)


def curvature_estimate(shell: Shell) -> float:
    """
    Second derivative k'' of the wavenumber along the shell direction, per unit of l, from the three zeros at
    j = -1, 0, 1.
    """
    rhos = [bessel_zero(shell.l0 + j * shell.q, shell.n0 - j * shell.p) for j in (-1, 0, 1)]
    return (rhos[0] - 2.0 * rhos[1] + rhos[2]) / (shell.config.radius * shell.q ** 2)


def find_shell(config: BilliardConfig, p: int, q: int, l0_hint: int, half_width: int,
               window: int = SEARCH_WINDOW, threshold: float = DEGENERACY_THRESHOLD) -> Shell:
    """
    Finds the most degenerate (p, q) shell near ``l0_hint``.

    The radial number at the hint is the index of the first zero of J_{l0_hint} beyond the ideal radius
    l0_hint / cos(pi p / q). That fixes the family; candidates l0 = l0_hint + i q, n0 = n0_hint - i p for
    |i| <= window are scored by relative spread, ties going to the smaller |l0 - l0_hint|.

    :param config: billiard constants
    :type config: BilliardConfig
    :param p: winding number
    :type p: int
    :param q: bounce count, q > p, gcd(p, q) = 1
    :type q: int
    :param l0_hint: approximate central angular momentum
    :type l0_hint: int
    :param half_width: J, the shell holds 2J + 1 members
    :type half_width: int
    :param window: how many family steps either side of the hint are tried
    :type window: int
    :param threshold: largest accepted relative spread
    :type threshold: float
    :return: the selected shell
    :rtype: Shell
    :raises ShellNotFoundError: when no candidate meets the threshold, or the orbit needs negative l
    :raises OrbitError: for invalid (p, q)
    """
    check_winding(p, q)
    if half_width < 0 or int(half_width) != half_width:
        raise SpectrumDomainError(f"Half width must be a non-negative integer, got {half_width}")
    cos_beta = math.cos(math.pi * p / q)
    if cos_beta <= 1e-12:
        raise ShellNotFoundError(f"Orbit ({p}, {q}) has no positive-l shell (cos(pi p/q) = {cos_beta:.3g}); "
                                 f"use ({q - p}, {q}) for the same orbit in the other sense")
    if l0_hint < 0:
        raise ShellNotFoundError("The hint must be a non-negative angular momentum")
    rho_ideal = l0_hint / cos_beta
    n0_hint = len(bessel_zeros_upto(int(l0_hint), rho_ideal)) + 1
    _logger.debug("Shell (%d, %d): ideal radius %.3f, n0 = %d at l0 = %d", p, q, rho_ideal, n0_hint, l0_hint)

    best = None
    best_key = None
    for i in range(-window, window + 1):
        l0 = int(l0_hint) + i * q
        n0 = n0_hint - i * p
        members = _family(config, l0, n0, q, -p, half_width)
        if members is None:
            continue
        rhos = [mode.rho for mode in members]
        score = _spread(rhos) / float(np.mean(rhos))
        key = (score, abs(l0 - l0_hint))
        _logger.debug("Candidate l0=%d n0=%d relative spread %.3e", l0, n0, score)
        if best_key is None or key < best_key:
            best_key = key
            best = (l0, n0, members)

    if best is None:
        raise ShellNotFoundError(f"No ({p}, {q}) shell with {2 * half_width + 1} valid members near l0 = {l0_hint}")
    if best_key[0] > threshold:
        raise ShellNotFoundError(f"Best ({p}, {q}) shell near l0 = {l0_hint} has relative spread "
                                 f"{best_key[0]:.3e} > {threshold}")
    l0, n0, members = best
    shell = Shell(p, q, l0, n0, tuple(members), config)
    _logger.info("Shell (%d, %d) at l0=%d n0=%d, rho_bar=%.4f, relative spread %.2e",
                 p, q, l0, n0, shell.rho_bar, best_key[0])
    return shell
