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
# Name:        test_spectrum.py
# Purpose:     Tool used to validate the spectrum/billiard.py module
#
# Author:      Robert Liang (lshy@mail.ustc.edu.cn)
#
# Licence:     refer to the LICENSE file
# -------------------------------------------------------------------------------

# Python Libs
import sys        # python path handling
import os         # platform independent paths
import unittest   # performs test
import math
#
# Module libs
sys.path.append(os.path.abspath((os.path.dirname(os.path.abspath(__file__)) + "/../")))   # add project root to lib search path
from scarlib.special.bessel_zeros import BesselRangeError, bessel_zero, bessel_zeros_upto
from scarlib.spectrum.billiard import (MAX_CUTOFF, BilliardConfig, EigenMode, SpectrumDomainError, eigen_mode,
                                       enumerate_modes, mean_level_density, mean_level_spacing, semiclassical_residual,
                                       weyl_count)  # Python Script under test
#------------------------------------------------------------------------------

TABLE_1 = [(111, 30), (114, 29), (117, 28), (120, 27), (123, 26), (126, 25), (129, 24)]


class test_spectrum(unittest.TestCase):

    def setUp(self):
        self.config = BilliardConfig()

    def test_config(self):
        self.assertEqual(self.config.radius, 1.0)
        self.assertAlmostEqual(self.config.energy(2.0), 2.0)
        other = BilliardConfig(radius=2.0, mass=0.5, hbar=3.0)
        self.assertAlmostEqual(other.wavenumber(4.0), 2.0)
        self.assertAlmostEqual(other.energy(4.0), 9.0 * 4.0 / 1.0)
        for kwargs in ({"radius": 0.0}, {"mass": -1.0}, {"hbar": float("nan")}, {"radius": float("inf")}):
            with self.assertRaises(SpectrumDomainError):
                BilliardConfig(**kwargs)

    def test_ground_state(self):
        modes = enumerate_modes(self.config, 3.0)
        self.assertEqual(len(modes), 1)
        mode = modes[0]
        self.assertEqual((mode.n, mode.l), (1, 0))
        self.assertAlmostEqual(mode.rho, 2.404825557695773, delta=1e-8)
        self.assertAlmostEqual(mode.energy, 0.5 * mode.rho ** 2, delta=1e-8)
        self.assertListEqual(enumerate_modes(self.config, 2.0), [])
        self.assertListEqual(enumerate_modes(self.config, 0.0), [])

    def test_cutoff_limit(self):
        self.assertGreater(MAX_CUTOFF, 526.0)
        self.assertLess(MAX_CUTOFF, 529.0)
        with self.assertRaises(BesselRangeError):
            enumerate_modes(self.config, 600.0)
        with self.assertRaises(BesselRangeError):
            enumerate_modes(self.config, MAX_CUTOFF + 0.01)
        with self.assertRaises(BesselRangeError):
            enumerate_modes(BilliardConfig(radius=2.0), 0.5 * MAX_CUTOFF + 0.01)

    def test_sorted_and_exhaustive(self):
        k_max = 40.0
        modes = enumerate_modes(self.config, k_max)
        energies = [mode.energy for mode in modes]
        self.assertListEqual(energies, sorted(energies))
        found = {(mode.l, mode.n) for mode in modes}
        expected = set()
        for l in range(0, 41):
            for n, _ in enumerate(bessel_zeros_upto(l, k_max), start=1):
                expected.add((l, n))
        self.assertSetEqual(found, expected)
        self.assertTrue(all(mode.rho <= k_max for mode in modes))

    def test_table_1_modes_present(self):
        modes = enumerate_modes(self.config, 243.0)
        by_index = {(mode.l, mode.n): mode for mode in modes}
        for l, n in TABLE_1:
            self.assertIn((l, n), by_index)
            self.assertAlmostEqual(by_index[(l, n)].rho, bessel_zero(l, n), delta=1e-9)

    def test_weyl(self):
        k_max = 100.0
        modes = enumerate_modes(self.config, k_max)
        states = sum(1 if mode.l == 0 else 2 for mode in modes)
        estimate = weyl_count(self.config, k_max)
        self.assertAlmostEqual(estimate, 2450.0)
        self.assertLess(abs(states - estimate) / estimate, 0.03)

    def test_eigen_mode(self):
        mode = eigen_mode(self.config, 120, 27)
        self.assertIsInstance(mode, EigenMode)
        self.assertAlmostEqual(mode.rho, 242.14, delta=0.01)
        self.assertAlmostEqual(mode.k, mode.rho)

    def test_residual_ground_state(self):
        mode = eigen_mode(self.config, 0, 1)
        self.assertAlmostEqual(semiclassical_residual(mode), 0.048631067503428, delta=1e-9)
        # l = 0 reduces to rho - (n - 1/4) pi
        for n in (2, 7, 40):
            mode = eigen_mode(self.config, 0, n)
            self.assertAlmostEqual(semiclassical_residual(mode), mode.rho - (n - 0.25) * math.pi, delta=1e-12)

    def test_residual_table_1(self):
        for l, n in TABLE_1:
            self.assertLess(abs(semiclassical_residual(eigen_mode(self.config, l, n))), 0.05)

    def test_residual_decreases_with_n(self):
        residuals = [abs(semiclassical_residual(eigen_mode(self.config, 20, n))) for n in range(5, 31)]
        self.assertTrue(all(b < a for a, b in zip(residuals, residuals[1:])))

    def test_residual_large_rho(self):
        for l in range(0, 251, 10):
            zeros = bessel_zeros_upto(l, 320.0)
            n = next(i for i, z in enumerate(zeros, start=1) if z > 300.0)
            mode = EigenMode.from_zero(n, l, zeros[n - 1], self.config)
            self.assertLess(abs(semiclassical_residual(mode)), 0.005, msg=f"l={l}")

    def test_residual_domain(self):
        with self.assertRaises(SpectrumDomainError):
            semiclassical_residual(EigenMode(n=1, l=10, rho=9.0, k=9.0, energy=40.5))

    def test_level_density(self):
        self.assertAlmostEqual(mean_level_density(self.config), 2.0 * math.pi)
        self.assertAlmostEqual(mean_level_density(BilliardConfig(mass=2.0)), 4.0 * math.pi)
        self.assertAlmostEqual(mean_level_density(BilliardConfig(radius=2.0)), 8.0 * math.pi)
        self.assertAlmostEqual(mean_level_spacing(self.config), 1.0 / (2.0 * math.pi))


# ------------------------------------------------------------------------------
if __name__ == '__main__':
    unittest.main()
# ------------------------------------------------------------------------------
