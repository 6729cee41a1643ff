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
# Name:        test_packet.py
# Purpose:     Tool used to validate the scar/packet.py module
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

import numpy as np
#
# Module libs
sys.path.append(os.path.abspath((os.path.dirname(os.path.abspath(__file__)) + "/../")))   # add project root to lib search path
from scarlib.spectrum.billiard import BilliardConfig, SpectrumDomainError, eigen_mode
from scarlib.spectrum.shell import Shell, find_shell
from scarlib.scar.packet import (DegeneratePacketError, angular_spread, build_packet, central_state,
                                 gaussian_weights, packet_amplitude, packet_density)  # Python Script under test
#------------------------------------------------------------------------------


class test_packet(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.config = BilliardConfig()
        cls.shell = find_shell(cls.config, 1, 3, 120, 3)
        cls.packet = build_packet(cls.shell, 0.25)

    def test_weights(self):
        weights = gaussian_weights(self.shell, 0.25)
        expected = [0.0796, 0.3247, 0.7548, 1.0, 0.7548, 0.3247, 0.0796]
        for w, e in zip(weights, expected):
            self.assertAlmostEqual(w, e, delta=5e-4)

    def test_normalized(self):
        self.assertAlmostEqual(float(np.sum(self.packet.weights)), 1.0, delta=1e-12)
        self.assertTrue(np.all(self.packet.coeffs.real > 0.0))
        self.assertTrue(np.all(self.packet.coeffs.imag == 0.0))
        self.assertAlmostEqual(self.packet.delta_l, 4.0)

    def test_symmetric(self):
        c = self.packet.coeffs
        self.assertTrue(np.allclose(c, c[::-1], rtol=0.0, atol=1e-15))
        self.assertEqual(int(np.argmax(np.abs(c))), 3)

    def test_wide_packet_is_flat(self):
        packet = build_packet(self.shell, 0.01)
        self.assertTrue(np.allclose(packet.weights, 1.0 / 7.0, rtol=0.01, atol=0.0))
        self.assertAlmostEqual(packet.participation_ratio, 7.0, delta=0.05)

    def test_participation_ratio(self):
        self.assertGreater(self.packet.participation_ratio, 1.0)
        self.assertLess(self.packet.participation_ratio, 7.0)

    def test_central_state(self):
        state = central_state(self.shell)
        self.assertEqual(len(state.shell), 1)
        self.assertEqual(state.shell.members[0].l, 120)
        phi = np.linspace(0.0, 2.0 * math.pi, 13)
        density = packet_density(state, np.full(phi.size, 0.7), phi)
        self.assertTrue(np.allclose(density, density[0], rtol=1e-10, atol=0.0))

    def test_wall_and_origin(self):
        r = np.linspace(0.0, 1.0, 201)
        phi = np.linspace(0.0, 2.0 * math.pi, 73)
        rr, pp = np.meshgrid(r, phi)
        peak = float(np.max(packet_density(self.packet, rr, pp)))
        wall = packet_density(self.packet, np.ones(phi.size), phi)
        self.assertLess(float(np.max(wall)), 1e-6 * peak)
        self.assertLess(packet_density(self.packet, 0.0, 1.0), 1e-30)

    def test_scalar_amplitude(self):
        value = packet_amplitude(self.packet, 0.8, 0.3)
        self.assertIsInstance(value, complex)
        self.assertAlmostEqual(packet_density(self.packet, 0.8, 0.3), abs(value) ** 2, delta=1e-12)

    def test_norm_quadrature(self):
        nodes, weights = np.polynomial.legendre.leggauss(300)
        r = 0.5 * (nodes + 1.0)
        wr = 0.5 * weights
        phi = 2.0 * math.pi * np.arange(64) / 64
        rr, pp = np.meshgrid(r, phi, indexing="ij")
        density = packet_density(self.packet, rr, pp)
        total = float(np.sum(density * (wr * r)[:, None]) * 2.0 * math.pi / 64)
        self.assertAlmostEqual(total, 1.0, delta=1e-6)

    def test_angular_spread(self):
        spread = angular_spread(self.packet, 0.9)
        self.assertGreaterEqual(spread, 0.125)
        self.assertLessEqual(spread, 0.5)
        self.assertLess(spread, angular_spread(build_packet(self.shell, 0.5), 0.9))

    def test_density_peaks_at_the_vertex(self):
        phi = 2.0 * math.pi * np.arange(720) / 720
        density = packet_density(self.packet, np.full(phi.size, 0.9), phi)
        best = float(phi[int(np.argmax(density))]) % (2.0 * math.pi / 3)
        self.assertAlmostEqual(best, math.pi / 3, delta=0.05)

    def test_errors(self):
        for delta_phi in (0.0, -0.1, 1.5):
            with self.assertRaises(SpectrumDomainError):
                build_packet(self.shell, delta_phi)
        with self.assertRaises(SpectrumDomainError):
            build_packet(self.shell.subset(1), 0.25)
        with self.assertRaises(SpectrumDomainError):
            packet_density(self.packet, 1.5, 0.0)
        with self.assertRaises(SpectrumDomainError):
            packet_density(self.packet, -0.1, 0.0)

    def test_degenerate(self):
        members = (eigen_mode(self.config, 9, 6), eigen_mode(self.config, 50, 5), eigen_mode(self.config, 91, 4))
        shell = Shell(1, 41, 50, 5, members, self.config)
        with self.assertRaises(DegeneratePacketError):
            build_packet(shell, 1.0)


# ------------------------------------------------------------------------------
if __name__ == '__main__':
    unittest.main()
# ------------------------------------------------------------------------------
