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
# Name:        grid_task.py
# Purpose:     Worker threads filling density grids band by band
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Internal classes not to be used directly by the user.

The grid is split into contiguous bands of rows and each band is filled by one :class:`GridTask`. The runner keeps
at most ``parallel_workers`` tasks alive and stitches the bands together only after every task has finished.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import logging
import threading
import time
from time import sleep
from typing import Callable, List, Optional

import numpy as np
import psutil

_logger = logging.getLogger("scarlib.GridTask")

__all__ = ["GridTask", "GridRunner", "default_workers", "format_time_difference"]

clock_function = time.time


def format_time_difference(time_diff: float) -> str:
    """Elapsed time as SS.mmm secs, MM:SS.mmm or HH:MM:SS.mmm, whichever is the shortest that fits."""
    total_ms = int(round(time_diff * 1000))
    seconds, milliseconds = divmod(total_ms, 1000)
    minutes, seconds = divmod(seconds, 60)
    hours, minutes = divmod(minutes, 60)
    if hours:
        return f"{hours:02d}:{minutes:02d}:{seconds:02d}.{milliseconds:03d}"
    if minutes:
        return f"{minutes:02d}:{seconds:02d}.{milliseconds:03d}"
    return f"{seconds:02d}.{milliseconds:03d} secs"


def default_workers() -> int:
    """Number of physical cores, 1 when it cannot be determined."""
    return psutil.cpu_count(logical=False) or 1


class GridTask(threading.Thread):
    """Evaluates ``density(x, y)`` on the rows [row_start, row_stop) of the grid."""

    def __init__(self, taskno: int, density: Callable[[np.ndarray, np.ndarray], np.ndarray],
                 x: np.ndarray, y: np.ndarray, mask: np.ndarray, row_start: int, row_stop: int):
        super().__init__(name=f"GridTask#{taskno}")
        self.taskno = taskno
        self.density = density
        self.x = x
        self.y = y
        self.mask = mask
        self.row_start = row_start
        self.row_stop = row_stop
        self.values = None
        self.error: Optional[BaseException] = None
        self.start_time = None
        self.stop_time = None

    def run(self):
        self.start_time = clock_function()
        band = slice(self.row_start, self.row_stop)
        mask = self.mask[band]
        values = np.zeros(mask.shape)
        try:
            if np.any(mask):
                values[mask] = self.density(self.x[band][mask], self.y[band][mask])
        except Exception as err:  # re-raised by the runner in the calling thread
            self.error = err
            _logger.error("GridTask #%d: %s", self.taskno, err)
        self.values = values
        self.stop_time = clock_function()
        _logger.debug("GridTask #%d: rows %d..%d done in %s", self.taskno, self.row_start, self.row_stop - 1,
                      format_time_difference(self.stop_time - self.start_time))


class GridRunner(object):
    """
    Fills a grid with a pool of :class:`GridTask` threads.

    :param parallel_workers: maximum number of tasks running at the same time, physical core count by default
    :type parallel_workers: int
    :param bands_per_worker: bands handed out per worker, for load balancing between the center and the rim
    :type bands_per_worker: int
    """

    def __init__(self, parallel_workers: Optional[int] = None, bands_per_worker: int = 4):
        self.parallel_workers = max(1, parallel_workers or default_workers())
        self.bands_per_worker = max(1, bands_per_worker)
        self.active_tasks: List[GridTask] = []

    def active_threads(self) -> int:
        self.active_tasks = [task for task in self.active_tasks if task.is_alive()]
        return len(self.active_tasks)

    def run(self, density: Callable[[np.ndarray, np.ndarray], np.ndarray],
            x: np.ndarray, y: np.ndarray, mask: np.ndarray) -> np.ndarray:
        """
        Evaluates ``density`` on every masked cell and returns the filled array (zero outside the mask).

        :raises Exception: the first error raised inside a task
        """
        rows = mask.shape[0]
        band_count = min(rows, self.parallel_workers * self.bands_per_worker)
        edges = np.linspace(0, rows, band_count + 1).astype(int)
        tasks = [GridTask(i, density, x, y, mask, int(edges[i]), int(edges[i + 1]))
                 for i in range(band_count) if edges[i + 1] > edges[i]]

        t0 = clock_function()
        for task in tasks:
            while self.active_threads() >= self.parallel_workers:
                sleep(0.01)
            self.active_tasks.append(task)
            task.start()
        for task in tasks:
            task.join()
        self.active_tasks = []

        for task in tasks:
            if task.error is not None:
                raise task.error
        values = np.zeros(mask.shape)
        for task in tasks:
            values[task.row_start:task.row_stop] = task.values
        _logger.info("Filled %d x %d grid with %d task(s) on %d worker(s) in %s", mask.shape[0], mask.shape[1],
                     len(tasks), self.parallel_workers, format_time_difference(clock_function() - t0))
        return values
