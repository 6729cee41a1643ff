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
# Name:        config_file.py
# Purpose:     Flat JSON configuration files for the command line tool
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Created:     18-10-2026
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------
"""
A configuration file is one flat JSON object whose keys are the long option names of the command line tool, with
either dashes or underscores (``"delta-phi"`` and ``"delta_phi"`` are the same key). Values must be JSON scalars.
"""
__author__ = "Robert Liang <lshy@mail.ustc.edu.cn>"
__copyright__ = "Copyright 2026, Hefei China"

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

_logger = logging.getLogger("scarlib.CLI")

__all__ = ["ConfigFileError", "load_config", "option_key"]


class ConfigFileError(ValueError):
    """The configuration file is not a flat JSON object."""
    pass


def option_key(name: str) -> str:
    """Normalizes an option name to its argparse destination."""
    return name.lstrip("-").replace("-", "_")


def load_config(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Reads a configuration file.

    :param path: file to read
    :return: option destination -> value
    :raises ConfigFileError: when the content is not a flat JSON object
    :raises OSError: when the file cannot be read
    """
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigFileError(f"{path}: {err}")
    if not isinstance(data, dict):
        raise ConfigFileError(f"{path}: expected a JSON object")
    config = {}
    for key, value in data.items():
        if isinstance(value, (dict, list)):
            raise ConfigFileError(f"{path}: value of {key!r} must be a scalar")
        dest = option_key(key)
        if dest in config:
            raise ConfigFileError(f"{path}: {key!r} given twice")
        config[dest] = value
    _logger.debug("Loaded %d option(s) from %s", len(config), path)
    return config
