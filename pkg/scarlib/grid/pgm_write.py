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
# Name:        pgm_write.py
# Purpose:     Banded NetPBM rendering of density grids
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Renders a :class:`DensityGrid` as a binary NetPBM (P5) image.

Densities are mapped linearly onto ``levels`` equal bands between 0 and the maximum, so the band edges play the role
of contour lines. The top band is white (255), the bottom one black. The first image row is the top of the disk
(largest y).
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
from pathlib import Path
from typing import Union

import numpy as np

from .density_grid import DensityGrid

_logger = logging.getLogger("scarlib.DensityGrid")

__all__ = ["quantize", "render_pgm", "MIN_LEVELS", "MAX_LEVELS"]

MIN_LEVELS = 2
MAX_LEVELS = 64


def quantize(grid: DensityGrid, levels: int) -> np.ndarray:
    """
    Gray levels of every cell, rows in image order (top row first).

    :param grid: the grid
    :type grid: DensityGrid
    :param levels: number of bands, within [2, 64]
    :type levels: int
    :return: n x n uint8 array
    """
    if not MIN_LEVELS <= levels <= MAX_LEVELS:
        raise ValueError(f"Levels must be within [{MIN_LEVELS}, {MAX_LEVELS}], got {levels}")
    peak = float(grid.values.max()) if grid.values.size else 0.0
    if peak > 0.0:
        bands = np.minimum(np.floor(grid.values / peak * levels), levels - 1).astype(np.int64)
    else:
        bands = np.zeros(grid.values.shape, dtype=np.int64)
    gray = np.rint(bands * (255.0 / (levels - 1))).astype(np.uint8)
    return gray[::-1]


def render_pgm(grid: DensityGrid, path: Union[str, Path], levels: int = 10) -> None:
    """
    Writes the banded image of a grid.

    :raises ValueError: for levels outside [2, 64]
    :raises OSError: on I/O failure
    """
    gray = quantize(grid, levels)
    with open(path, "wb") as f:
        f.write(f"P5\n{grid.n_cells} {grid.n_cells}\n255\n".encode("ascii"))
        f.write(np.ascontiguousarray(gray).tobytes())
    _logger.debug("Rendered %d x %d image with %d levels to %s", grid.n_cells, grid.n_cells, levels, path)
