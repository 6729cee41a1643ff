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
# Name:        classical.py
# Purpose:     Closed classical orbits of the circular billiard
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Geometry of the periodic (p, q) orbits: a polygon (p = 1) or a star (p > 1) with q vertices on the wall, each
chord advancing the polar angle by 2 pi p / q and touching the caustic circle of radius R cos(pi p / q).

Also holds the tube diagnostics that measure how much of a density grid sits around such an orbit.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

_logger = logging.getLogger("scarlib.Orbits")

__all__ = [
    "OrbitError",
    "TubeError",
    "OrbitPath",
    "check_winding",
    "orbit_vertices",
    "orbit_path",
    "caustic_radius_of",
    "chord_distance",
    "tube_fraction",
    "fit_orbit_phase",
]

Point = Tuple[float, float]

PHASE_SAMPLES = 36


class OrbitError(ValueError):
    """Invalid winding numbers (p, q)."""
    pass


class TubeError(ValueError):
    """Tube half-width smaller than a grid cell."""
    pass


def check_winding(p: int, q: int) -> None:
    """Raises :class:`OrbitError` unless q > p >= 1 and gcd(p, q) = 1."""
    if int(p) != p or int(q) != q:
        raise OrbitError(f"Winding numbers must be integers, got ({p}, {q})")
    if not (q > p >= 1):
        raise OrbitError(f"Winding numbers must satisfy q > p >= 1, got ({p}, {q})")
    if math.gcd(int(p), int(q)) != 1:
        raise OrbitError(f"p and q must have no common factor, got ({p}, {q})")


def orbit_vertices(p: int, q: int, phi0: float = 0.0) -> List[float]:
    """
    Wall angles of the q bounces, in traversal order: (phi0 + 2 pi p k / q) mod 2 pi for k = 0 .. q-1.

    :raises OrbitError: for invalid (p, q)
    """
    check_winding(p, q)
    return [(phi0 + 2.0 * math.pi * p * k / q) % (2.0 * math.pi) for k in range(q)]


@dataclass(frozen=True)
class OrbitPath:
    """
    A closed (p, q) orbit.

    The orbit closes after q bounces; ``m_pq`` keeps the p*q bounce count that is sometimes quoted for the same
    orbit.
    """
    p: int
    q: int
    phi0: float
    radius: float
    vertices: Tuple[float, ...]
    chords: Tuple[Tuple[Point, Point], ...]
    caustic_radius: float

    @property
    def m_pq(self) -> int:
        return self.p * self.q

    def polyline(self) -> List[Point]:
        """Vertex coordinates in traversal order, the first one repeated at the end."""
        points = [chord[0] for chord in self.chords]
        points.append(self.chords[0][0])
        return points

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "phi0": self.phi0,
            "radius": self.radius,
            "caustic_radius": self.caustic_radius,
            "m_pq": self.m_pq,
            "polyline": [[x, y] for x, y in self.polyline()],
        }


def orbit_path(p: int, q: int, phi0: float = 0.0, radius: float = 1.0) -> OrbitPath:
    """
    Builds the (p, q) orbit whose first vertex is at wall angle phi0.

    :raises OrbitError: for invalid (p, q)
    """
    angles = orbit_vertices(p, q, phi0)
    points = [(radius * math.cos(a), radius * math.sin(a)) for a in angles]
    chords = tuple((points[k], points[(k + 1) % q]) for k in range(q))
    return OrbitPath(p=int(p), q=int(q), phi0=float(phi0), radius=float(radius), vertices=tuple(angles),
                     chords=chords, caustic_radius=radius * math.cos(math.pi * p / q))


def caustic_radius_of(shell) -> float:
    """Caustic radius l0 R / rho_bar of a shell."""
    return shell.l0 * shell.config.radius / shell.rho_bar


def chord_distance(path: OrbitPath, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Distance from each point (x, y) to the nearest chord segment of the orbit."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    best = np.full(np.broadcast(x, y).shape, np.inf)
    for (x0, y0), (x1, y1) in path.chords:
        dx = x1 - x0
        dy = y1 - y0
        length2 = dx * dx + dy * dy
        t = np.clip(((x - x0) * dx + (y - y0) * dy) / length2, 0.0, 1.0)
        best = np.minimum(best, np.hypot(x - (x0 + t * dx), y - (y0 + t * dy)))
    return best


def tube_fraction(grid, path: OrbitPath, half_width: float) -> float:
    """
    Share of the in-disk density lying within ``half_width`` of a chord.

    :param grid: density grid covering the disk
    :type grid: DensityGrid
    :param path: the orbit
    :type path: OrbitPath
    :param half_width: tube half-width, same length unit as the grid
    :type half_width: float
    :return: fraction within [0, 1]
    :rtype: float
    :raises TubeError: when the tube is thinner than one grid cell
    """
    if half_width < grid.cell_size:
        raise TubeError(f"Tube half-width {half_width} is below the cell size {grid.cell_size}")
    x, y = grid.cell_centers()
    inside = grid.mask
    values = np.where(inside, grid.values, 0.0)
    total = float(values.sum())
    if total <= 0.0:
        _logger.warning("Grid holds no density, tube fraction reported as 0")
        return 0.0
    tube = chord_distance(path, x, y) <= half_width
    return float(min(1.0, values[tube].sum() / total))


def fit_orbit_phase(grid, p: int, q: int, half_width: float, samples: int = PHASE_SAMPLES) -> float:
    """
    Orientation phi0 of the (p, q) orbit that captures the most density, scanned over one rotational period
    [0, 2 pi / q) with ``samples`` points. The first best sample wins.
    """
    check_winding(p, q)
    best_phase = 0.0
    best_fraction = -1.0
    for i in range(samples):
        phase = 2.0 * math.pi * i / (q * samples)
        fraction = tube_fraction(grid, orbit_path(p, q, phase, grid.radius), half_width)
        if fraction > best_fraction:
            best_phase = phase
            best_fraction = fraction
    _logger.info("Orbit (%d, %d) fitted at phi0 = %.4f, tube fraction %.3f", p, q, best_phase, best_fraction)
    return best_phase
