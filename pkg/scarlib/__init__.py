# -*- coding: utf-8 -*-

# Convenience direct imports
from .special.bessel import bessel_j, bessel_j_prime, BesselDomainError
from .special.bessel_zeros import bessel_zero, bessel_zeros_upto, BesselRangeError
from .spectrum.billiard import BilliardConfig, EigenMode, enumerate_modes, semiclassical_residual, mean_level_density
from .spectrum.shell import Shell, find_shell, shell_spread, relative_spread, ShellNotFoundError
from .scar.packet import ScarPacket, build_packet, central_state, packet_amplitude, packet_density
from .scar.asymptotic import caustic_angle, asymptotic_density
from .scar.lifetime import LifetimeReport, classical_time, lifetime_report
from .evolution.survival import SurvivalCurve, survival, survival_curve, lifetime_consistency
from .orbits.classical import OrbitPath, orbit_vertices, orbit_path, caustic_radius_of, tube_fraction
from .grid.density_grid import DensityGrid, PacketSource, AsymptoticSource, eval_grid, read_csv, write_csv
from .grid.pgm_write import render_pgm


def all_loggers():
    """
    Returns all the name strings used as logger identifiers.

    :return: A List of strings which contains all the logger's names used in this library.
    :rtype: list[str]
    """
    return [
        "scarlib.Bessel",
        "scarlib.BesselZeros",
        "scarlib.Spectrum",
        "scarlib.Shell",
        "scarlib.ScarPacket",
        "scarlib.Asymptotic",
        "scarlib.Lifetime",
        "scarlib.Survival",
        "scarlib.Orbits",
        "scarlib.DensityGrid",
        "scarlib.GridTask",
        "scarlib.Reports",
        "scarlib.CLI",
    ]


def set_log_level(level):
    """
    Sets the logging level for all loggers used in the library.

    :param level: The logging level to be used, eg. logging.ERROR, logging.DEBUG, etc.
    :type level: int
    """
    import logging
    for logger in all_loggers():
        logging.getLogger(logger).setLevel(level)


def add_log_handler(handler):
    """
    Sets the logging handler for all loggers used in the library.

    :param handler: The logging handler to be used, eg. logging.NullHandler
    :type handler: Handler
    """
    import logging
    for logger in all_loggers():
        logging.getLogger(logger).addHandler(handler)
