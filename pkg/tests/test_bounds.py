#!/usr/bin/env python3
"""
Test suite for entropy, kappa_sp and the rate/radius bounds.
"""

import math
import unittest
from pathlib import Path
import sys

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from pairsuite.bounds import (
    bound_report,
    delta_grid,
    entropy_q,
    gv_rate_hamming,
    gv_rate_pair,
    johnson_list_size,
    johnson_radius,
    johnson_radius_asymptotic,
    kappa_objective,
    kappa_sp,
    list_radius_upper,
    singleton_rate,
    singleton_size_check,
)
from pairsuite.exceptions import DomainError, NoSolution


class TestEntropy(unittest.TestCase):
    """Test the q-ary entropy function."""

    def test_values(self):
        """H_q(0) = 0, H_q((q-1)/q) = 1, H_2(0.5) = 1."""
        self.assertEqual(entropy_q(5, 0.0), 0.0)
        self.assertAlmostEqual(entropy_q(5, 0.8), 1.0, places=12)
        self.assertAlmostEqual(entropy_q(2, 0.5), 1.0, places=12)
        self.assertAlmostEqual(entropy_q(2, 1.0), 0.0, places=12)

    def test_vectorised(self):
        """Arrays are evaluated elementwise."""
        values = entropy_q(3, np.array([0.0, 0.5, 2 / 3]))
        self.assertEqual(values.shape, (3,))
        self.assertAlmostEqual(values[2], 1.0, places=12)

    def test_domain(self):
        """Arguments outside [0, 1] raise DomainError."""
        with self.assertRaises(DomainError):
            entropy_q(2, 1.5)
        with self.assertRaises(DomainError):
            entropy_q(1, 0.5)


class TestKappa(unittest.TestCase):
    """Test the kappa_sp maximisation."""

    def test_zero(self):
        """kappa_sp(0) = 0 at the origin."""
        result = kappa_sp(17, 0.0)
        self.assertEqual((result.value, result.beta, result.theta), (0.0, 0.0, 0.0))

    def test_argmax_feasible_and_consistent(self):
        """The maximiser lies in the region and reproduces the value."""
        for q, delta in [(2, 0.3), (17, 0.5), (4, 0.9)]:
            result = kappa_sp(q, delta)
            self.assertLessEqual(result.theta / 2, result.beta + 1e-12)
            self.assertLessEqual(result.beta, result.theta + 1e-12)
            self.assertLessEqual(result.theta, delta + 1e-12)
            self.assertAlmostEqual(kappa_objective(q, result.beta, result.theta), result.value, places=9)

    def test_no_finer_grid_point_exceeds(self):
        """A dense verification grid never beats the returned maximum."""
        for q, delta in [(2, 0.5), (17, 0.5)]:
            result = kappa_sp(q, delta)
            grid = np.linspace(0.0, delta, 2001)
            B, T = np.meshgrid(grid, grid, indexing="ij")
            feasible = (T / 2 <= B) & (B <= T)
            best = np.max(kappa_objective(q, B[feasible], T[feasible]))
            self.assertLessEqual(best, result.value + 1e-9)
            self.assertGreaterEqual(result.value, best - 1e-5)

    def test_monotone(self):
        """kappa_sp is nondecreasing on a 100-point grid."""
        for q in (2, 17):
            values = [kappa_sp(q, d, tol=1e-6).value for d in np.linspace(0, 1, 100)]
            self.assertTrue(all(b >= a - 1e-9 for a, b in zip(values, values[1:])), f"q={q}")

    def test_below_hamming_entropy(self):
        """kappa_sp(delta) <= H_q(delta) on (0, 1 - 1/q] for q = 17."""
        for delta in np.linspace(0.01, 16 / 17, 40):
            self.assertLessEqual(kappa_sp(17, float(delta), tol=1e-6).value, entropy_q(17, float(delta)) + 1e-9)

    def test_domain(self):
        """Bad delta or tolerance raises DomainError."""
        with self.assertRaises(DomainError):
            kappa_sp(2, 1.2)
        with self.assertRaises(DomainError):
            kappa_sp(2, 0.5, tol=1e-12)

    def test_deterministic(self):
        """Repeated calls give identical results."""
        self.assertEqual(kappa_sp(3, 0.4), kappa_sp(3, 0.4))


class TestRates(unittest.TestCase):
    """Test GV, Singleton and list-radius bounds."""

    def test_gv_at_zero(self):
        """Both GV rates and Singleton are 1 at delta = 0."""
        self.assertEqual(gv_rate_pair(17, 0.0), 1.0)
        self.assertEqual(gv_rate_hamming(17, 0.0), 1.0)
        self.assertEqual(singleton_rate(0.0), 1.0)
        self.assertEqual(singleton_rate(1.0), 0.0)

    def test_gv_hamming_vanishes(self):
        """Hamming GV rate is 0 at delta = (q-1)/q."""
        self.assertAlmostEqual(gv_rate_hamming(17, 16 / 17), 0.0, places=12)
        self.assertAlmostEqual(gv_rate_hamming(17, 0.3), 1 - entropy_q(17, 0.3), places=12)

    def test_pair_gv_dominates(self):
        """gv_pair >= gv_hamming pointwise for q = 17 and both stay below Singleton."""
        for delta in delta_grid(0.0, 1.0, 0.05):
            self.assertGreaterEqual(gv_rate_pair(17, delta) + 1e-9, gv_rate_hamming(17, delta))
            for q in (2, 17):
                self.assertLessEqual(gv_rate_pair(q, delta), singleton_rate(delta) + 1e-9)

    def test_singleton_size_check(self):
        """RS[7,3] over F_8 (d_P = n - k + 2 = 6) meets the pair Singleton bound with equality."""
        self.assertTrue(singleton_size_check(7, 8 ** 3, 6, 8))
        self.assertFalse(singleton_size_check(7, 8 ** 3, 7, 8))
        self.assertTrue(singleton_size_check(5, 3 ** 5, 2, 3))
        self.assertFalse(singleton_size_check(7, 8 ** 4, 6, 8))
        with self.assertRaises(DomainError):
            singleton_size_check(7, 8, 1, 8)

    def test_list_radius_round_trip(self):
        """Inverting the GV rate recovers delta."""
        for q, delta in [(2, 0.2), (17, 0.3), (17, 0.6)]:
            rate = gv_rate_pair(q, delta)
            self.assertAlmostEqual(list_radius_upper(q, rate), delta, delta=1e-4)

    def test_list_radius_extremes(self):
        """Rates near 1 give radii near 0; rates outside (0, 1) have no solution."""
        self.assertLess(list_radius_upper(17, 0.999), 0.01)
        with self.assertRaises(NoSolution):
            list_radius_upper(17, 1.0)
        with self.assertRaises(NoSolution):
            list_radius_upper(17, 0.0)


class TestJohnson(unittest.TestCase):
    """Test the Johnson-type radius and list size."""

    def test_endpoints(self):
        """tau(0) = 0 and tau at the cap equals the cap."""
        cap = (16 - 1) / 16
        self.assertEqual(johnson_radius(4, 0.0), 0.0)
        self.assertAlmostEqual(johnson_radius(4, cap), cap, places=12)

    def test_value(self):
        """q=4, delta=0.5 against a direct evaluation."""
        expected = 15 / 16 * (1 - math.sqrt(1 - 16 * 0.5 / 15))
        self.assertAlmostEqual(johnson_radius(4, 0.5), expected, places=14)

    def test_sandwich_and_convexity(self):
        """delta/2 <= tau <= delta, tau increasing and convex."""
        for q in (2, 4, 17):
            cap = (q * q - 1) / (q * q)
            grid = np.linspace(0, cap, 200)
            taus = np.array([johnson_radius(q, float(d)) for d in grid])
            self.assertTrue(np.all(grid / 2 <= taus + 1e-12))
            self.assertTrue(np.all(taus <= grid + 1e-12))
            self.assertTrue(np.all(np.diff(taus) > 0))
            self.assertTrue(np.all(np.diff(taus, 2) >= -1e-12))

    def test_asymptotic(self):
        """Large q approaches 1 - sqrt(1 - delta)."""
        self.assertAlmostEqual(johnson_radius(257, 0.5), johnson_radius_asymptotic(0.5), places=4)

    def test_domain(self):
        """delta beyond the cap is rejected."""
        with self.assertRaises(DomainError):
            johnson_radius(2, 0.8)

    def test_list_size(self):
        """2 (q^2 - 1) n d."""
        self.assertEqual(johnson_list_size(2, 4, 2), 48)
        self.assertEqual(johnson_list_size(3, 10, 5), 800)
        self.assertEqual(johnson_list_size(3, 10, 6) - johnson_list_size(3, 10, 5), 160)
        with self.assertRaises(DomainError):
            johnson_list_size(3, 10, 0)


class TestBoundReport(unittest.TestCase):
    """Test grids and reports."""

    def test_zero_row(self):
        """delta = 0 gives (0, 1, 1, 1, 0)."""
        row = bound_report(17, [0.0]).rows[0]
        self.assertEqual((row.delta, row.gv_pair, row.gv_hamming, row.singleton, row.johnson_tau), (0.0, 1.0, 1.0, 1.0, 0.0))

    def test_grid(self):
        """delta_grid is strictly increasing and hits both ends."""
        grid = delta_grid(0.0, 1.0, 0.01)
        self.assertEqual(len(grid), 101)
        self.assertEqual(grid[-1], 1.0)
        self.assertTrue(all(b > a for a, b in zip(grid, grid[1:])))

    def test_report_rows(self):
        """Rates stay in [0, 1]; Johnson is absent beyond its cap."""
        report = bound_report(2, [0.1, 0.5, 0.8])
        self.assertEqual(report.deltas, [0.1, 0.5, 0.8])
        self.assertEqual(report.johnson_list_coefficient, 6)
        self.assertIsNone(report.rows[-1].johnson_tau)
        for row in report.rows:
            for value in (row.gv_pair, row.gv_hamming, row.singleton):
                self.assertTrue(0.0 <= value <= 1.0)

    def test_rejects_unsorted(self):
        """Non-increasing grids are rejected."""
        with self.assertRaises(DomainError):
            bound_report(2, [0.2, 0.1])


if __name__ == "__main__":
    unittest.main()
