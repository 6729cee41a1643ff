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
# Name:        report_write.py
# Purpose:     Versioned JSON and CSV reports
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Serialization of shells, packets, lifetimes, survival curves and orbits.

Every document carries ``format_version``. JSON is written with sorted keys and a fixed indent, so the same
inputs always give the same bytes. Infinite or undefined figures (an unbounded lifetime, a curvature that needs a
neighbour shell) are written as ``null``, so any strict JSON reader accepts the output.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import json
import logging
import math
from dataclasses import asdict
from pathlib import Path
from typing import Optional, Union

from ..evolution.survival import ConsistencyReport, SurvivalCurve
from ..orbits.classical import OrbitPath
from ..scar.lifetime import LifetimeReport
from ..scar.packet import ScarPacket
from ..spectrum.shell import Shell

_logger = logging.getLogger("scarlib.Reports")

__all__ = [
    "FORMAT_VERSION",
    "shell_document",
    "packet_document",
    "zeros_document",
    "orbit_document",
    "survival_footer",
    "dump_json",
    "write_json",
    "write_survival_csv",
]

FORMAT_VERSION = 1


def shell_document(shell: Shell) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "p": shell.p,
        "q": shell.q,
        "l0": shell.l0,
        "n0": shell.n0,
        "beta0": shell.beta0,
        "rho_bar": shell.rho_bar,
        "members": [{"l": mode.l, "n": mode.n, "rho": mode.rho} for mode in shell.members],
    }


def packet_document(packet: ScarPacket, report: LifetimeReport) -> dict:
    shell = shell_document(packet.shell)
    del shell["format_version"]
    doc = {
        "format_version": FORMAT_VERSION,
        "shell": shell,
        "delta_phi": packet.delta_phi,
        "delta_l": packet.delta_l,
        "coeffs": [[c.real, c.imag] for c in packet.coeffs.tolist()],
        "participation_ratio": packet.participation_ratio,
    }
    doc.update(report.to_dict())
    return doc


def zeros_document(l: int, zeros) -> dict:
    return {"format_version": FORMAT_VERSION, "l": int(l), "zeros": [float(z) for z in zeros]}


def orbit_document(path: OrbitPath) -> dict:
    doc = {"format_version": FORMAT_VERSION}
    doc.update(path.to_dict())
    return doc


def survival_footer(curve: SurvivalCurve, consistency: ConsistencyReport, t_classical: float) -> dict:
    doc = {"format_version": FORMAT_VERSION, "t_classical": t_classical, "tau_numeric_over_T": curve.tau_numeric}
    doc.update(asdict(consistency))
    doc["ratio"] = consistency.tau_q / t_classical
    return doc


def _finite(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _finite(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(v) for v in value]
    return value


def dump_json(doc: dict) -> str:
    return json.dumps(_finite(doc), indent=2, sort_keys=True, allow_nan=False) + "\n"


def write_json(doc: dict, path: Optional[Union[str, Path]] = None) -> str:
    """Writes a document to ``path`` (when given) and returns its text."""
    text = dump_json(doc)
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        _logger.debug("Wrote %s", path)
    return text


def write_survival_csv(curve: SurvivalCurve, path: Union[str, Path]) -> None:
    """Writes ``t_over_T,survival`` rows under a versioned comment line."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(f"# format_version={FORMAT_VERSION}\n")
        f.write("t_over_T,survival\n")
        for t, c in zip(curve.times.tolist(), curve.values.tolist()):
            f.write(f"{t:.17g},{c:.17g}\n")
    _logger.debug("Wrote %d survival sample(s) to %s", curve.times.size, path)
