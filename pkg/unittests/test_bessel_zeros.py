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
# Name:        test_bessel_zeros.py
# Purpose:     Tool used to validate the special/bessel_zeros.py module
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
import time

import numpy as np
#
# Module libs
sys.path.append(os.path.abspath((os.path.dirname(os.path.abspath(__file__)) + "/../")))   # add project root to lib search path
from scarlib.special.bessel import bessel_j, bessel_j_prime
from scarlib.special.bessel_zeros import (BesselRangeError, bessel_zero, bessel_zeros_upto,
                                          scan_zeros)  # Python Script under test
#------------------------------------------------------------------------------

TABLE_1 = [(111, 30, 241.87), (114, 29, 242.00), (117, 28, 242.09), (120, 27, 242.14), (123, 26, 242.13),
           (126, 25, 242.07), (129, 24, 241.96)]


def bisect_oracle(f, a, b, iterations=200):
    fa = f(a)
    for _ in range(iterations):
        m = 0.5 * (a + b)
        fm = f(m)
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


class test_bessel_zeros(unittest.TestCase):

    def test_first_zero_of_j0(self):
        expected = bisect_oracle(lambda x: bessel_j(0, x), 2.0, 3.0)
        self.assertAlmostEqual(bessel_zero(0, 1), expected, delta=1e-8)
        self.assertAlmostEqual(bessel_zero(0, 1), 2.404825557695773, delta=1e-8)

    def test_table_1(self):
        """
        @note  the seven zeros of the (1, 3) shell around l = 120
        """
        t0 = time.time()
        for l, n, rho in TABLE_1:
            self.assertAlmostEqual(bessel_zero(l, n), rho, delta=0.01, msg=f"zero #{n} of J_{l}")
        self.assertLess(time.time() - t0, 5.0)

    def test_zeros_upto(self):
        zeros = bessel_zeros_upto(0, 10.0)
        self.assertEqual(len(zeros), 3)
        for z, expected in zip(zeros, (2.404825557695773, 5.520078110286311, 8.653727912911013)):
            self.assertAlmostEqual(z, expected, delta=1e-8)
        self.assertListEqual(bessel_zeros_upto(0, 2.0), [])
        self.assertListEqual(bessel_zeros_upto(5, 4.0), [])
        zeros = bessel_zeros_upto(111, 243.0)
        self.assertGreaterEqual(len(zeros), 30)
        self.assertAlmostEqual(zeros[29], 241.87, delta=0.01)

    def test_strictly_increasing(self):
        for l in (0, 1, 17, 120, 400):
            zeros = bessel_zeros_upto(l, 1000.0)
            self.assertTrue(all(b > a for a, b in zip(zeros, zeros[1:])))
            self.assertTrue(all(b - a > math.pi * 0.99 for a, b in zip(zeros, zeros[1:])))
        self.assertLess(bessel_zero(7, 3), bessel_zero(7, 4))



    def test_residual(self):
        for l in (0, 3, 50, 111, 250, 512):
            zeros = np.asarray(bessel_zeros_upto(l, 1024.0))
            values = np.abs(bessel_j(l, zeros))
            slopes = np.abs(bessel_j_prime(l, zeros))
            self.assertTrue(np.all(values <= 1e-8 * np.maximum(1.0, slopes)), msg=f"order {l}")

    def test_interlacing(self):
        zeros = scan_zeros(range(0, 61), 300.0)
        for l in range(0, 60):
            a = zeros[l]
            b = zeros[l + 1]
            # j_{l,k} < j_{l+1,k} < j_{l,k+1}
            for k in range(len(b)):
                self.assertLess(a[k], b[k])
                if k + 1 < len(a):
                    self.assertLess(b[k], a[k + 1])

    def test_half_step_rescan(self):
        for l in (0, 9, 120):
            coarse = bessel_zeros_upto(l, 400.0)
            fine = bessel_zeros_upto(l, 400.0, step=math.pi / 8)
            self.assertEqual(len(coarse), len(fine))
            self.assertLessEqual(max(abs(a - b) for a, b in zip(coarse, fine)), 1e-9)

    def test_batch_matches_single(self):
        zeros = scan_zeros([0, 111, 120], 243.0)
        self.assertTrue(np.allclose(zeros[111], bessel_zeros_upto(111, 243.0), atol=1e-10, rtol=0.0))
        self.assertAlmostEqual(zeros[120][26], bessel_zero(120, 27), delta=1e-9)

    def test_range_errors(self):
        with self.assertRaises(BesselRangeError):
            bessel_zero(0, 400)
        with self.assertRaises(BesselRangeError):
            bessel_zeros_upto(0, 2000.0)
        with self.assertRaises(ValueError):
            bessel_zero(0, 0)
        with self.assertRaises(ValueError):
            bessel_zero(600, 1)


# ------------------------------------------------------------------------------
if __name__ == '__main__':
    unittest.main()
# ------------------------------------------------------------------------------
