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
# Name:        density_grid.py
# Purpose:     Probability densities sampled on a Cartesian grid over the disk
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Density grids.

The square [-R, R]^2 is divided in n x n cells. Cell (i, j) is row i (y axis) and column j (x axis), its center is
at (-R + (j + 1/2) 2R/n, -R + (i + 1/2) 2R/n). Cells whose center lies inside the disk form the mask; values outside
the mask are exactly 0.

CSV layout::

    # format_version=1;n_cells=512;radius=1;source=packet;...
    i,j,value
    ...

Only masked cells are written, one per line, with 17 significant digits, so reading back gives bitwise equal
values and the same mask.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

import numpy as np

from ..scar.asymptotic import asymptotic_density, natural_orbit_phase
from ..scar.packet import ScarPacket, packet_density
from ..spectrum.shell import Shell
from .grid_task import GridRunner

_logger = logging.getLogger("scarlib.DensityGrid")

__all__ = [
    "FORMAT_VERSION",
    "GridFormatError",
    "DensityGrid",
    "PacketSource",
    "AsymptoticSource",
    "cell_centers",
    "disk_mask",
    "eval_grid",
    "write_csv",
    "read_csv",
    "pearson_on_annulus",
    "MIN_CELLS",
    "MAX_CELLS",
]

FORMAT_VERSION = 1
MIN_CELLS = 32
MAX_CELLS = 4096
DEFAULT_CELLS = 512
_RESERVED = ("format_version", "n_cells", "radius")
_FORBIDDEN = (";", "=", "\n", "\r")


class GridFormatError(ValueError):
    """Malformed grid file or grid content that cannot be written."""
    pass


def cell_centers(n_cells: int, radius: float) -> Tuple[np.ndarray, np.ndarray]:
    """Cell center coordinates (x, y), each an n x n array indexed [row, column]."""
    axis = -radius + (np.arange(n_cells) + 0.5) * (2.0 * radius / n_cells)
    x, y = np.meshgrid(axis, axis)
    return x, y


def disk_mask(n_cells: int, radius: float) -> np.ndarray:
    x, y = cell_centers(n_cells, radius)
    return x * x + y * y <= radius * radius


@dataclass(eq=False)
class DensityGrid:
    """
    Sampled density over the disk.

    :param n_cells: cells per axis
    :param radius: disk radius R, the grid spans [-R, R]^2
    :param values: n x n array, row-major, zero outside the mask
    :param mask: n x n boolean array of the cells that belong to the disk
    :param meta: provenance, string keys and values
    """
    n_cells: int
    radius: float
    values: np.ndarray
    mask: np.ndarray
    meta: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        shape = (self.n_cells, self.n_cells)
        if self.values.shape != shape or self.mask.shape != shape:
            raise GridFormatError(f"Grid arrays must be {shape}")
        if np.any(~np.isfinite(self.values)) or np.any(self.values < 0.0):
            raise GridFormatError("Grid values must be finite and non-negative")
        self.values = np.where(self.mask, self.values, 0.0)

    @property
    def cell_size(self) -> float:
        return 2.0 * self.radius / self.n_cells

    def cell_centers(self) -> Tuple[np.ndarray, np.ndarray]:
        return cell_centers(self.n_cells, self.radius)

    def polar(self) -> Tuple[np.ndarray, np.ndarray]:
        """Radius and angle of every cell center."""
        x, y = self.cell_centers()
        return np.hypot(x, y), np.arctan2(y, x)


class PacketSource(object):
    """Exact density |psi|^2 of a packet."""

    def __init__(self, packet: ScarPacket):
        self.packet = packet
        self.radius = packet.config.radius

    def density(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        r = np.minimum(np.hypot(x, y), self.radius)
        return packet_density(self.packet, r, np.arctan2(y, x))

    def meta(self) -> Dict[str, str]:
        shell = self.packet.shell
        return {
            "source": "packet",
            "p": str(shell.p),
            "q": str(shell.q),
            "l0": str(shell.l0),
            "n0": str(shell.n0),
            "members": str(len(shell)),
            "delta_phi": repr(self.packet.delta_phi),
        }


class AsymptoticSource(object):
    """
    Ridge density of a shell.

    :param shell: the shell
    :param delta_phi: ridge width
    :param phi0: wall angle of the first vertex, the packet's natural phase when omitted
    :param envelope: include the radial envelope (on by default for grids)
    """

    def __init__(self, shell: Shell, delta_phi: float, phi0: Optional[float] = None, envelope: bool = True):
        self.shell = shell
        self.delta_phi = delta_phi
        self.phi0 = natural_orbit_phase(shell) if phi0 is None else phi0
        self.envelope = envelope
        self.radius = shell.config.radius

    def density(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        r = np.minimum(np.hypot(x, y), self.radius)
        return asymptotic_density(self.shell, self.delta_phi, r, np.arctan2(y, x), self.phi0, self.envelope)

    def meta(self) -> Dict[str, str]:
        shell = self.shell
        return {
            "source": "asymptotic",
            "p": str(shell.p),
            "q": str(shell.q),
            "l0": str(shell.l0),
            "n0": str(shell.n0),
            "members": str(len(shell)),
            "delta_phi": repr(self.delta_phi),
            "phi0": repr(self.phi0),
            "envelope": str(self.envelope).lower(),
        }


def eval_grid(source: Union[PacketSource, AsymptoticSource], n_cells: int = DEFAULT_CELLS,
              parallel_workers: Optional[int] = None) -> DensityGrid:
    """
    Samples a density source at the cell centers.

    Evaluating a packet costs one Bessel recurrence per member and cell; a 512 x 512 grid of a seven member shell
    takes a few seconds per core.

    :param source: :class:`PacketSource` or :class:`AsymptoticSource`
    :param n_cells: cells per axis, within [32, 4096]
    :type n_cells: int
    :param parallel_workers: worker threads, physical core count by default. The result does not depend on it.
    :type parallel_workers: int
    :return: the grid
    :rtype: DensityGrid
    """
    if not MIN_CELLS <= n_cells <= MAX_CELLS:
        raise ValueError(f"Grid resolution must be within [{MIN_CELLS}, {MAX_CELLS}], got {n_cells}")
    radius = source.radius
    x, y = cell_centers(n_cells, radius)
    mask = x * x + y * y <= radius * radius
    values = GridRunner(parallel_workers).run(source.density, x, y, mask)
    return DensityGrid(n_cells=n_cells, radius=radius, values=values, mask=mask, meta=source.meta())


def _check_token(text: str) -> str:
    if any(char in text for char in _FORBIDDEN) or not text.strip():
        raise GridFormatError(f"Meta entry {text!r} cannot be written to a grid header")
    return text


def write_csv(grid: DensityGrid, path: Union[str, Path]) -> None:
    """
    Writes a grid as CSV.

    :raises GridFormatError: for meta keys or values holding ';', '=' or line breaks
    :raises OSError: on I/O failure
    """
    header = [f"format_version={FORMAT_VERSION}", f"n_cells={grid.n_cells}", f"radius={grid.radius!r}"]
    for key, value in grid.meta.items():
        if key in _RESERVED:
            raise GridFormatError(f"Meta key {key!r} is reserved")
        header.append(f"{_check_token(str(key))}={_check_token(str(value))}")
    rows, cols = np.nonzero(grid.mask)
    values = grid.values[rows, cols]
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("# " + ";".join(header) + "\n")
        f.write("i,j,value\n")
        for i, j, v in zip(rows.tolist(), cols.tolist(), values.tolist()):
            f.write(f"{i},{j},{v:.17g}\n")
    _logger.debug("Wrote %d cell(s) to %s", rows.size, path)


def _parse_value(token: str, line_no: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise GridFormatError(f"Line {line_no}: {token!r} is not a number")
    if not math.isfinite(value) or value < 0.0:
        raise GridFormatError(f"Line {line_no}: {token!r} is not a finite non-negative density")
    return value


def read_csv(path: Union[str, Path]) -> DensityGrid:
    """
    Reads a grid written by :func:`write_csv`.

    :raises GridFormatError: on a malformed header or data line, NaN/inf/negative values included
    :raises OSError: on I/O failure
    """
    with open(path, "r", encoding="utf-8") as f:
        lines = f.read().splitlines()
    if len(lines) < 2 or not lines[0].startswith("# "):
        raise GridFormatError(f"{path}: missing header")
    fields = {}
    for item in lines[0][2:].split(";"):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise GridFormatError(f"{path}: malformed header entry {item!r}")
        if key in fields:
            raise GridFormatError(f"{path}: duplicate header entry {key!r}")
        fields[key] = value
    if fields.get("format_version") != str(FORMAT_VERSION):
        raise GridFormatError(f"{path}: unsupported format_version {fields.get('format_version')!r}")
    try:
        n_cells = int(fields["n_cells"])
        radius = float(fields["radius"])
    except (KeyError, ValueError):
        raise GridFormatError(f"{path}: header needs integer n_cells and numeric radius")
    if n_cells < 1 or not (math.isfinite(radius) and radius > 0):
        raise GridFormatError(f"{path}: invalid grid geometry")
    if lines[1] != "i,j,value":
        raise GridFormatError(f"{path}: missing column line")

    values = np.zeros((n_cells, n_cells))
    mask = np.zeros((n_cells, n_cells), dtype=bool)
    for line_no, line in enumerate(lines[2:], start=3):
        tokens = line.split(",")
        if len(tokens) != 3:
            raise GridFormatError(f"Line {line_no}: expected i,j,value")
        try:
            i = int(tokens[0])
            j = int(tokens[1])
        except ValueError:
            raise GridFormatError(f"Line {line_no}: bad cell index")
        if not (0 <= i < n_cells and 0 <= j < n_cells) or mask[i, j]:
            raise GridFormatError(f"Line {line_no}: cell ({i}, {j}) out of range or repeated")
        values[i, j] = _parse_value(tokens[2], line_no)
        mask[i, j] = True
    meta = {key: value for key, value in fields.items() if key not in _RESERVED}
    return DensityGrid(n_cells=n_cells, radius=radius, values=values, mask=mask, meta=meta)


def pearson_on_annulus(grid_a: DensityGrid, grid_b: DensityGrid, r_inner: float) -> float:
    """Pearson correlation of two grids over the masked cells with r_inner <= r <= R."""
    if grid_a.n_cells != grid_b.n_cells or grid_a.radius != grid_b.radius:
        raise ValueError("Grids must share resolution and radius")
    r, _ = grid_a.polar()
    cells = grid_a.mask & grid_b.mask & (r >= r_inner)
    a = grid_a.values[cells]
    b = grid_b.values[cells]
    if a.size < 2 or np.std(a) == 0.0 or np.std(b) == 0.0:
        return math.nan
    return float(np.corrcoef(a, b)[0, 1])
