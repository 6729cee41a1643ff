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
# Name:        test_report_write.py
# Purpose:     Tool used to validate the reports/report_write.py and utils/config_file.py modules
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------

# Python Libs
import sys        # python path handling
import os         # platform independent paths
import unittest   # performs test
import json
import tempfile
from pathlib import Path
#
# Module libs
sys.path.append(os.path.abspath((os.path.dirname(os.path.abspath(__file__)) + "/../")))   # add project root to lib search path
from scarlib.evolution.survival import lifetime_consistency, survival_curve
from scarlib.scar.lifetime import classical_time, lifetime_report
from scarlib.scar.packet import build_packet, central_state
from scarlib.spectrum.billiard import BilliardConfig
from scarlib.spectrum.shell import find_shell
from scarlib.utils.config_file import ConfigFileError, load_config, option_key
from scarlib.reports.report_write import (dump_json, packet_document, shell_document, survival_footer,
                                          write_json)  # Python Script under test
#------------------------------------------------------------------------------


class test_report_write(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.shell = find_shell(BilliardConfig(), 1, 3, 120, 3)
        cls.packet = build_packet(cls.shell, 0.25)

    def test_shell_document(self):
        doc = shell_document(self.shell)
        self.assertEqual(doc["format_version"], 1)
        self.assertEqual([m["l"] for m in doc["members"]], [111, 114, 117, 120, 123, 126, 129])
        self.assertEqual([m["n"] for m in doc["members"]], [30, 29, 28, 27, 26, 25, 24])

    def test_packet_document(self):
        doc = packet_document(self.packet, lifetime_report(self.packet))
        self.assertNotIn("format_version", doc["shell"])
        self.assertEqual(len(doc["coeffs"]), 7)
        self.assertEqual(doc["coeffs"][3][1], 0.0)
        self.assertIn("tau_q", doc)
        self.assertIn("participation_ratio", doc)

    def test_stable_text(self):
        doc = packet_document(self.packet, lifetime_report(self.packet))
        self.assertEqual(dump_json(doc), dump_json(json.loads(dump_json(doc))))
        self.assertTrue(dump_json({"b": 1, "a": 2}).startswith('{\n  "a": 2'))

    def test_survival_footer(self):
        t_classical = classical_time(self.packet)
        curve = survival_curve(self.packet, 40.0 * t_classical, 512)
        footer = survival_footer(curve, lifetime_consistency(self.packet, 40.0 * t_classical, 512), t_classical)
        self.assertAlmostEqual(footer["tau_numeric_over_T"], curve.tau_numeric)
        self.assertAlmostEqual(footer["ratio"], lifetime_report(self.packet).ratio)
        self.assertIn("ratio_of_estimates", footer)

    def test_unbounded_lifetime_is_strict_json(self):
        def reject(token):
            raise ValueError(f"non-standard JSON constant {token}")

        state = central_state(self.shell)
        t_classical = classical_time(state)
        curve = survival_curve(state, 40.0 * t_classical, 64)
        footer = survival_footer(curve, lifetime_consistency(state, 40.0 * t_classical, 64), t_classical)
        doc = json.loads(dump_json(footer), parse_constant=reject)
        self.assertIsNone(doc["tau_numeric"])
        self.assertIsNone(doc["tau_q"])
        self.assertIsNone(doc["ratio"])
        doc = json.loads(dump_json(packet_document(state, lifetime_report(state))), parse_constant=reject)
        self.assertIsNone(doc["tau_q"])
        self.assertIsNone(doc["delta_phi"])
        with self.assertRaises(ValueError):
            json.loads('{"tau_q": Infinity}', parse_constant=reject)

    def test_write_json(self):
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / "shell.json"
            text = write_json(shell_document(self.shell), path)
            self.assertEqual(path.read_text(encoding="utf-8"), text)

    def test_config_file(self):
        self.assertEqual(option_key("--delta-phi"), "delta_phi")
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / "run.json"
            path.write_text('{"delta-phi": 0.5, "cells": 64}', encoding="utf-8")
            self.assertDictEqual(load_config(path), {"delta_phi": 0.5, "cells": 64})
            path.write_text('{"delta-phi": 0.5, "delta_phi": 0.25}', encoding="utf-8")
            with self.assertRaises(ConfigFileError):
                load_config(path)
            path.write_text('[1, 2]', encoding="utf-8")
            with self.assertRaises(ConfigFileError):
                load_config(path)
            path.write_text('{"cells": ', encoding="utf-8")
            with self.assertRaises(ConfigFileError):
                load_config(path)


# ------------------------------------------------------------------------------
if __name__ == '__main__':
    unittest.main()
# ------------------------------------------------------------------------------
