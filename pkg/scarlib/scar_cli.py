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
# Name:        scar_cli.py
# Purpose:     Command line front end of scarlib
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
Command line tool.

    scarlib zeros --l 111 --count 30
    scarlib shell --p 1 --q 3 --l0 120 --half-width 3
    scarlib scar --p 1 --q 3 --l0 120 --delta-phi 0.25 [--members 6]
    scarlib evolve --t-max-over-T 40 --steps 2048 --out survival.csv
    scarlib grid --source packet --cells 512 --out density.csv
    scarlib render --grid density.csv --levels 10 --out density.pgm
    scarlib pipeline --config run.json --out-dir results

Every subcommand accepts ``--config FILE`` (flat JSON, keys are the long option names); options given on the command
line win over the file. Exit codes: 0 success, 2 usage error, 3 numeric domain error, 4 I/O error.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import set_log_level
from .evolution.survival import LIFETIME_THRESHOLD, lifetime_consistency, survival_curve
from .grid.density_grid import (AsymptoticSource, DensityGrid, GridFormatError, PacketSource, eval_grid,
                                pearson_on_annulus, read_csv, write_csv, MIN_CELLS, MAX_CELLS)
from .grid.pgm_write import MAX_LEVELS, MIN_LEVELS, render_pgm
from .orbits.classical import caustic_radius_of, fit_orbit_phase, orbit_path, tube_fraction
from .reports.report_write import (orbit_document, packet_document, shell_document, survival_footer,
                                   write_json, write_survival_csv, zeros_document)
from .scar.lifetime import classical_time, lifetime_report
from .scar.packet import ScarPacket, angular_spread, build_packet, central_state
from .special.bessel import MAX_ARGUMENT
from .special.bessel_zeros import bessel_zero, bessel_zeros_upto
from .spectrum.billiard import BilliardConfig
from .spectrum.shell import DEGENERACY_THRESHOLD, SEARCH_WINDOW, Shell, find_shell
from .utils.config_file import ConfigFileError, load_config

_logger = logging.getLogger("scarlib.CLI")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

TUBE_HALF_WIDTH = 0.15  # in units of R


class UsageError(Exception):
    pass


def _common_options() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", type=str, default=None, help="Flat JSON file with option defaults")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug messages")
    parser.add_argument("--radius", type=float, default=1.0, help="Billiard radius R. Default is 1")
    parser.add_argument("--mass", type=float, default=1.0, help="Particle mass M. Default is 1")
    parser.add_argument("--hbar", type=float, default=1.0, help="Reduced Planck constant. Default is 1")
    return parser


def _shell_options() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--p", type=int, default=1, help="Winding number p. Default is 1")
    parser.add_argument("--q", type=int, default=3, help="Bounce count q. Default is 3")
    parser.add_argument("--l0", type=int, default=120, help="Angular momentum hint. Default is 120")
    parser.add_argument("--half-width", type=int, default=3, help="Shell half width J. Default is 3")
    parser.add_argument("--window", type=int, default=SEARCH_WINDOW,
                        help=f"Family steps searched around the hint. Default is {SEARCH_WINDOW}")
    parser.add_argument("--threshold", type=float, default=DEGENERACY_THRESHOLD,
                        help=f"Largest relative rho spread accepted. Default is {DEGENERACY_THRESHOLD}")
    return parser


def _packet_options() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--delta-phi", type=float, default=0.25, help="Angular width. Default is 0.25")
    parser.add_argument("--members", type=int, default=None,
                        help="Keep only this many shell members, closest to l0 first")
    return parser


def _evolve_options() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--t-max-over-T", dest="t_max_over_T", type=float, default=40.0,
                        help="Time window in units of the classical time. Default is 40")
    parser.add_argument("--steps", type=int, default=2048, help="Survival samples. Default is 2048")
    parser.add_argument("--lifetime-threshold", type=float, default=LIFETIME_THRESHOLD,
                        help="Survival level defining the numerical lifetime. Default is 1/e")
    return parser


def _grid_options() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--cells", type=int, default=512, help="Grid cells per axis. Default is 512")
    parser.add_argument("--workers", type=int, default=None,
                        help="Worker threads for the grid fill. Default is the number of physical cores")
    return parser


def _render_options() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--levels", type=int, default=10, help="Number of gray bands. Default is 10")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scarlib",
        description="Scar wave packets of the circular billiard: Bessel zeros, energy shells, packets, "
                    "lifetimes and density grids."
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    common = _common_options()

    sub = subparsers.add_parser("zeros", parents=[common], help="Positive zeros of J_l")
    sub.add_argument("--l", type=int, default=None, help="Bessel order")
    sub.add_argument("--count", type=int, default=None, help="Number of zeros")
    sub.add_argument("--out", type=str, default=None, help="Output JSON file. Default is the standard output")
    sub.set_defaults(func=cmd_zeros)

    sub = subparsers.add_parser("shell", parents=[common, _shell_options()], help="Find a degenerate shell")
    sub.add_argument("--out", type=str, default=None, help="Output JSON file. Default is the standard output")
    sub.set_defaults(func=cmd_shell)

    sub = subparsers.add_parser("scar", parents=[common, _shell_options(), _packet_options()],
                                help="Build a scar packet and its lifetime report")
    sub.add_argument("--out", type=str, default=None, help="Output JSON file. Default is the standard output")
    sub.set_defaults(func=cmd_scar)

    sub = subparsers.add_parser("evolve", parents=[common, _shell_options(), _packet_options(), _evolve_options()],
                                help="Survival probability of a scar packet")
    sub.add_argument("--out", type=str, default="survival.csv",
                     help="Output CSV file; the JSON footer goes next to it. Default is survival.csv")
    sub.set_defaults(func=cmd_evolve)

    sub = subparsers.add_parser("grid", parents=[common, _shell_options(), _packet_options(), _grid_options()],
                                help="Sample a density on the disk")
    sub.add_argument("--source", choices=("packet", "asymptotic"), default="packet",
                     help="Exact packet density or asymptotic ridge density. Default is packet")
    sub.add_argument("--phi0", type=float, default=None,
                     help="Wall angle of the first orbit vertex for the ridge density. Default is pi p/q")
    sub.add_argument("--out", type=str, default="density.csv", help="Output CSV file. Default is density.csv")
    sub.set_defaults(func=cmd_grid)

    sub = subparsers.add_parser("render", parents=[common, _render_options()], help="Render a grid as PGM")
    sub.add_argument("--grid", type=str, default=None, help="Grid CSV file")
    sub.add_argument("--out", type=str, default=None, help="Output PGM file. Default is the grid name with .pgm")
    sub.set_defaults(func=cmd_render)

    sub = subparsers.add_parser("pipeline", parents=[common, _shell_options(), _packet_options(), _evolve_options(),
                                                     _grid_options(), _render_options()],
                                help="Run shell, scar, evolve, grid and render in one go")
    sub.add_argument("--out-dir", type=str, default=".", help="Output folder. Default is the current folder")
    sub.set_defaults(func=cmd_pipeline)
    return parser


def _apply_config(parser: argparse.ArgumentParser, path: str) -> None:
    config = load_config(path)
    config.pop("config", None)
    subparsers = [action for action in parser._actions if isinstance(action, argparse._SubParsersAction)][0]
    known = set()
    for sub in subparsers.choices.values():
        dests = {action.dest for action in sub._actions if action.dest not in ("help", "config", "func")}
        sub.set_defaults(**{key: value for key, value in config.items() if key in dests})
        known |= dests
    unknown = sorted(set(config) - known)
    if unknown:
        raise ConfigFileError(f"{path}: unknown option(s) {', '.join(unknown)}")


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parses the command line, with defaults taken from ``--config`` when given. Raises SystemExit on bad usage."""
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", type=str, default=None)
    known, _ = pre.parse_known_args(argv)
    if known.config is not None:
        try:
            _apply_config(parser, known.config)
        except ConfigFileError as err:
            parser.error(str(err))
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        parser.exit(EXIT_USAGE)
    try:
        _validate(args)
    except UsageError as err:
        parser.error(str(err))
    return args


def _validate(args: argparse.Namespace) -> None:
    if args.command == "zeros" and (args.l is None or args.count is None):
        raise UsageError("zeros needs --l and --count")
    if args.command == "zeros" and args.count < 1:
        raise UsageError("--count must be at least 1")
    if args.command == "render" and args.grid is None:
        raise UsageError("render needs --grid")
    if getattr(args, "cells", None) is not None and not MIN_CELLS <= args.cells <= MAX_CELLS:
        raise UsageError(f"--cells must be within [{MIN_CELLS}, {MAX_CELLS}]")
    if getattr(args, "levels", None) is not None and not MIN_LEVELS <= args.levels <= MAX_LEVELS:
        raise UsageError(f"--levels must be within [{MIN_LEVELS}, {MAX_LEVELS}]")
    if getattr(args, "steps", None) is not None and args.steps < 2:
        raise UsageError("--steps must be at least 2")
    if getattr(args, "t_max_over_T", None) is not None and not args.t_max_over_T > 0:
        raise UsageError("--t-max-over-T must be positive")
    if getattr(args, "workers", None) is not None and args.workers < 1:
        raise UsageError("--workers must be at least 1")


def _emit(doc: dict, out: Optional[str]) -> None:
    text = write_json(doc, out)
    if out is None:
        sys.stdout.write(text)


def _billiard(args) -> BilliardConfig:
    return BilliardConfig(radius=args.radius, mass=args.mass, hbar=args.hbar)


def _shell(args) -> Shell:
    return find_shell(_billiard(args), args.p, args.q, args.l0, args.half_width, window=args.window,
                      threshold=args.threshold)


def _packet(args) -> ScarPacket:
    shell = _shell(args)
    if args.members is not None:
        shell = shell.subset(args.members)
    return build_packet(shell, args.delta_phi)


def cmd_zeros(args) -> None:
    last = bessel_zero(args.l, args.count)
    zeros = bessel_zeros_upto(args.l, min(MAX_ARGUMENT, last + 1.0))[:args.count]
    _emit(zeros_document(args.l, zeros), args.out)


def cmd_shell(args) -> None:
    _emit(shell_document(_shell(args)), args.out)


def cmd_scar(args) -> None:
    packet = _packet(args)
    _emit(packet_document(packet, lifetime_report(packet)), args.out)


def _evolve(packet: ScarPacket, args, csv_path: Path) -> dict:
    t_classical = classical_time(packet)
    t_max = args.t_max_over_T * t_classical
    curve = survival_curve(packet, t_max, args.steps, args.lifetime_threshold)
    consistency = lifetime_consistency(packet, t_max, args.steps, args.lifetime_threshold)
    write_survival_csv(curve, csv_path)
    footer = survival_footer(curve, consistency, t_classical)
    write_json(footer, csv_path.with_suffix(".json"))
    return footer


def cmd_evolve(args) -> None:
    _evolve(_packet(args), args, Path(args.out))


def cmd_grid(args) -> None:
    packet = _packet(args)
    if args.source == "packet":
        source = PacketSource(packet)
    else:
        source = AsymptoticSource(packet.shell, args.delta_phi, args.phi0)
    write_csv(eval_grid(source, args.cells, args.workers), args.out)


def cmd_render(args) -> None:
    grid = read_csv(args.grid)
    out = args.out if args.out is not None else str(Path(args.grid).with_suffix(".pgm"))
    render_pgm(grid, out, args.levels)


def _diagnostics(packet: ScarPacket, exact: DensityGrid, ridge: DensityGrid, args) -> dict:
    shell = packet.shell
    half_width = TUBE_HALF_WIDTH * shell.config.radius
    phi0 = fit_orbit_phase(exact, shell.p, shell.q, half_width)
    path = orbit_path(shell.p, shell.q, phi0, shell.config.radius)
    baseline = eval_grid(PacketSource(central_state(shell)), args.cells, args.workers)
    doc = orbit_document(path)
    doc.update({
        "tube_half_width": half_width,
        "tube_fraction": tube_fraction(exact, path, half_width),
        "baseline_tube_fraction": tube_fraction(baseline, path, half_width),
        "annulus_correlation": pearson_on_annulus(exact, ridge, caustic_radius_of(shell)),
        "angular_spread": angular_spread(packet, 0.9 * shell.config.radius),
    })
    return doc


def cmd_pipeline(args) -> None:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    packet = _packet(args)
    shell = packet.shell
    write_json(shell_document(shell), out_dir / "shell.json")
    write_json(packet_document(packet, lifetime_report(packet)), out_dir / "scar.json")
    _evolve(packet, args, out_dir / "survival.csv")

    exact = eval_grid(PacketSource(packet), args.cells, args.workers)
    ridge = eval_grid(AsymptoticSource(shell, args.delta_phi), args.cells, args.workers)
    for name, grid in (("density_exact", exact), ("density_asymptotic", ridge)):
        write_csv(grid, out_dir / f"{name}.csv")
        render_pgm(grid, out_dir / f"{name}.pgm", args.levels)
    write_json(_diagnostics(packet, exact, ridge, args), out_dir / "orbit.json")
    _logger.info("Pipeline results written to %s", out_dir)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = parse_arguments(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE
    except OSError as err:
        _logger.error("Cannot read configuration: %s", err)
        return EXIT_IO

    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    set_log_level(logging.DEBUG if args.verbose else logging.WARNING)
    try:
        args.func(args)
    except (GridFormatError, OSError) as err:
        _logger.error("I/O error: %s", err)
        return EXIT_IO
    except (ValueError, LookupError, ArithmeticError) as err:
        _logger.error("%s: %s", type(err).__name__, err)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
