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
# Name:        test_bessel.py
# Purpose:     Tool used to validate the special/bessel.py module
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
from decimal import Decimal, getcontext

import numpy as np
#
# Module libs
sys.path.append(os.path.abspath((os.path.dirname(os.path.abspath(__file__)) + "/../")))   # add project root to lib search path
from scarlib.special.bessel import (BesselDomainError, bessel_eval, bessel_j, bessel_j_prime,
                                    bessel_triplet)  # Python Script under test
#------------------------------------------------------------------------------


def series_oracle(l, x, digits=60):
    """J_l(x) summed term by term in decimal arithmetic."""
    getcontext().prec = digits
    half = Decimal(x) / 2
    term = half ** l / math.factorial(l)
    total = Decimal(0)
    k = 0
    while True:
        total += term
        k += 1
        term = -term * half * half / (k * (k + l))
        if abs(term) < Decimal(10) ** (-40) and k > 2 * float(half):
            break
    return float(total)


class test_bessel(unittest.TestCase):

    def test_origin(self):
        """
        @note  exact values at x = 0
        """
        self.assertEqual(bessel_j(0, 0.0), 1.0)
        self.assertEqual(bessel_j(5, 0.0), 0.0)
        self.assertEqual(bessel_j_prime(0, 0.0), 0.0)
        self.assertEqual(bessel_j_prime(1, 0.0), 0.5)

    def test_small_argument_series(self):
        expected = sum((-1) ** k * 0.5 ** (1 + 2 * k) / (math.factorial(k) * math.factorial(k + 1)) for k in range(30))
        self.assertAlmostEqual(bessel_j(1, 1.0), expected, delta=1e-10)

    def test_series_oracle_equivalence(self):
        rng = np.random.default_rng(20)
        for _ in range(200):
            l = int(rng.integers(0, 11))
            x = float(rng.uniform(0.0, 20.0))
            self.assertAlmostEqual(bessel_j(l, x), series_oracle(l, x), delta=1e-10, msg=f"J_{l}({x})")

    def test_known_values(self):
        self.assertAlmostEqual(bessel_j(0, 100.0), 0.019985850304223122, delta=1e-12)
        self.assertAlmostEqual(bessel_j(1, 100.0), -0.07714535201411216, delta=1e-12)
        # 30th zero of J_111 lies close to 241.87
        self.assertLess(abs(bessel_j(111, 241.87)), 5e-3)

    def test_derivative_at_first_zero(self):
        x = 2.404825557695773
        self.assertAlmostEqual(bessel_j_prime(0, x), -series_oracle(1, x), delta=1e-10)

    def test_sum_rule(self):
        x = 50.0
        values = bessel_j(np.arange(0, 151), x)
        total = values[0] ** 2 + 2.0 * np.sum(values[1:] ** 2)
        self.assertAlmostEqual(total, 1.0, delta=1e-10)

    def test_recurrence_identity(self):
        rng = np.random.default_rng(7)
        l = rng.integers(1, 201, size=10000)
        x = rng.uniform(0.05, 400.0, size=10000)
        lo, mid, hi = bessel_triplet(l, x)
        residual = np.abs(lo + hi - (2.0 * l / x) * mid)
        self.assertLessEqual(residual.max(), 1e-8)
        # lower and upper neighbours agree with direct evaluation
        self.assertLessEqual(np.abs(lo - bessel_j(l - 1, x)).max(), 1e-10)
        self.assertLessEqual(np.abs(hi - bessel_j(l + 1, x)).max(), 1e-10)

    def test_derivative_identity(self):
        rng = np.random.default_rng(11)
        l = rng.integers(1, 201, size=2000)
        x = rng.uniform(0.0, 400.0, size=2000)
        deriv = bessel_j_prime(l, x)
        expected = 0.5 * (bessel_j(l - 1, x) - bessel_j(l + 1, x))
        self.assertLessEqual(np.abs(deriv - expected).max(), 1e-8)
        # finite differences at a few points
        for order, arg in ((3, 7.5), (120, 200.0), (40, 35.0)):
            h = 1e-5
            numeric = (bessel_j(order, arg + h) - bessel_j(order, arg - h)) / (2 * h)
            self.assertAlmostEqual(bessel_j_prime(order, arg), numeric, delta=1e-8)

    def test_bounded(self):
        rng = np.random.default_rng(3)
        l = rng.integers(0, 513, size=5000)
        x = rng.uniform(0.0, 1024.0, size=5000)
        values = bessel_j(l, x)
        self.assertTrue(np.all(np.isfinite(values)))
        self.assertLessEqual(np.abs(values).max(), 1.0)
        self.assertTrue(np.all(np.isfinite(bessel_j_prime(l, x))))

    def test_elementwise_independence(self):
        """
        @note  a value does not depend on the array it is evaluated with
        """
        l = np.array([0, 5, 120, 120, 300, 1])
        x = np.array([0.3, 17.0, 241.87, 60.0, 999.0, 1.0])
        batch = bessel_j(l, x)
        for i in range(l.size):
            self.assertEqual(batch[i], bessel_j(int(l[i]), float(x[i])))
        self.assertTrue(np.array_equal(bessel_j(120, x[1:4]), bessel_j(np.full(3, 120), x[1:4])))

    def test_eval_record(self):
        record = bessel_eval(2, 3.0)
        self.assertEqual(record.order, 2)
        self.assertEqual(record.argument, 3.0)
        self.assertAlmostEqual(record.value, series_oracle(2, 3.0), delta=1e-12)
        self.assertAlmostEqual(record.derivative, 0.5 * (series_oracle(1, 3.0) - series_oracle(3, 3.0)), delta=1e-12)

    def test_domain_errors(self):
        with self.assertRaises(BesselDomainError):
            bessel_j(-1, 1.0)
        with self.assertRaises(BesselDomainError):
            bessel_j(513, 1.0)
        with self.assertRaises(BesselDomainError):
            bessel_j(0, -0.5)
        with self.assertRaises(BesselDomainError):
            bessel_j(0, 1024.5)
        with self.assertRaises(BesselDomainError):
            bessel_j(1.5, 2.0)
        with self.assertRaises(BesselDomainError):
            bessel_j_prime(2, float("nan"))
        self.assertIsInstance(BesselDomainError("x"), ValueError)


# ------------------------------------------------------------------------------
if __name__ == '__main__':
    unittest.main()
# ------------------------------------------------------------------------------
