#!/usr/bin/env python3
"""
Test suite for random-code list-decodability experiments.
"""

import unittest
from pathlib import Path
import sys
from unittest import mock

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from pairsuite.exceptions import DomainError, SearchSpaceTooLarge, SizeTooLarge
from pairsuite.experiments import (
    RandomCode,
    code_size,
    double_counting_check,
    double_counting_sides,
    gv_list_experiment,
    is_list_decodable,
    list_size_threshold,
    max_list_size,
    sample_random_code,
    split_trial_seed,
    trial_seeds,
)


def _code(q, n, rows):
    return RandomCode(q=q, n=n, rate=0.0, seed=0, words=np.array(rows, dtype=np.int64))


class TestRandomCode(unittest.TestCase):
    """Test random code sampling."""

    def test_code_size(self):
        """M = ceil(q^{Rn}): 2^{0.5*10} = 32, rate 0 gives 1."""
        self.assertEqual(code_size(2, 10, 0.5), 32)
        self.assertEqual(code_size(3, 10, 0.0), 1)
        self.assertEqual(code_size(2, 10, 0.55), 46)

    def test_shape_and_alphabet(self):
        """Words are rows of symbols in [0, q)."""
        code = sample_random_code(3, 6, 0.5, seed=1)
        self.assertEqual(code.words.shape, (code_size(3, 6, 0.5), 6))
        self.assertTrue(np.all((code.words >= 0) & (code.words < 3)))

    def test_deterministic(self):
        """The same seed gives the same code; another seed differs."""
        a = sample_random_code(2, 12, 0.5, seed=5)
        b = sample_random_code(2, 12, 0.5, seed=5)
        c = sample_random_code(2, 12, 0.5, seed=6)
        self.assertTrue(np.array_equal(a.words, b.words))
        self.assertFalse(np.array_equal(a.words, c.words))

    def test_domain(self):
        """Bad parameters are rejected; huge codes hit the guard."""
        with self.assertRaises(DomainError):
            sample_random_code(2, 8, 1.5, seed=0)
        with self.assertRaises(DomainError):
            sample_random_code(1, 8, 0.5, seed=0)
        with self.assertRaises(SizeTooLarge):
            sample_random_code(2, 30, 1.0, seed=0)


class TestMaxListSize(unittest.TestCase):
    """Test exhaustive and sampled list-size audits."""

    def test_two_word_code(self):
        """{0000, 1111} at radius 2: no ball holds both words."""
        self.assertEqual(max_list_size(_code(2, 4, [[0, 0, 0, 0], [1, 1, 1, 1]]), 2), 1)

    def test_radius_extremes(self):
        """Radius 0 counts the largest multiplicity; radius n counts the whole multiset."""
        code = _code(3, 4, [[0, 1, 2, 0], [0, 1, 2, 0], [2, 2, 2, 2]])
        self.assertEqual(max_list_size(code, 0), 2)
        self.assertEqual(max_list_size(code, 4), 3)

    def test_monotone_in_radius(self):
        """Larger balls never hold fewer codewords."""
        code = sample_random_code(2, 10, 0.5, seed=3)
        sizes = [max_list_size(code, r) for r in range(11)]
        self.assertEqual(sizes, sorted(sizes))
        self.assertEqual(sizes[-1], code.size)

    def test_sampled_is_lower_bound(self):
        """Sampled centres never exceed the exhaustive maximum."""
        code = sample_random_code(3, 7, 0.5, seed=4)
        exact = max_list_size(code, 3)
        self.assertLessEqual(max_list_size(code, 3, mode="sampled", centers=200, seed=1), exact)

    def test_guard_and_mode(self):
        """Exhaustive search over 2^21 centres is refused; unknown modes are rejected."""
        code = _code(2, 21, [[0] * 21])
        with self.assertRaises(SearchSpaceTooLarge):
            max_list_size(code, 1)
        self.assertLessEqual(max_list_size(code, 1, mode="sampled", centers=16), 1)
        with self.assertRaises(DomainError):
            max_list_size(_code(2, 4, [[0, 0, 0, 0]]), 1, mode="greedy")
        with self.assertRaises(DomainError):
            max_list_size(_code(2, 4, [[0, 0, 0, 0]]), -1)

    def test_is_list_decodable(self):
        """(2, 1)-list decodability of {0000, 1111}."""
        code = _code(2, 4, [[0, 0, 0, 0], [1, 1, 1, 1]])
        self.assertTrue(is_list_decodable(code, 2, 1))
        self.assertFalse(is_list_decodable(code, 4, 1))


class TestDoubleCounting(unittest.TestCase):
    """Test sum_y |B_P(y, r) & C| = |C| |B_P(r)|."""

    def test_fifty_codes(self):
        """Exact identity for 50 random codes and several radii."""
        rng = np.random.default_rng(50)
        for index in range(50):
            q = 2 if index % 2 else 3
            n = int(rng.integers(4, 11 if q == 2 else 8))
            code = sample_random_code(q, n, 0.4, seed=index)
            for radius in (0, 1, 2, 3, n):
                left, right = double_counting_sides(code, radius)
                self.assertEqual(left, right, f"q={q} n={n} radius={radius}")
            self.assertTrue(double_counting_check(code, 2))


class TestExperiment(unittest.TestCase):
    """Test the GV-style list-decoding experiment."""

    def test_threshold(self):
        """L = ceil(4/eps) - 1."""
        self.assertEqual(list_size_threshold(0.1), 39)
        self.assertEqual(list_size_threshold(0.5), 7)
        self.assertEqual(list_size_threshold(1.0), 3)
        with self.assertRaises(DomainError):
            list_size_threshold(0.0)

    def test_trial_seeds_prefix_stable(self):
        """Trial i receives the same seed however many trials run."""
        self.assertEqual(trial_seeds(7, 5), trial_seeds(7, 12)[:5])
        self.assertEqual(len(set(trial_seeds(7, 12))), 12)

    def test_reproducible(self):
        """Same master seed, same report, whatever the thread count."""
        a = gv_list_experiment(2, 12, 0.25, 0.15, 20, seed=7, threads=1)
        b = gv_list_experiment(2, 12, 0.25, 0.15, 20, seed=7, threads=4)
        self.assertEqual(a.to_dict(), b.to_dict())
        self.assertEqual(a.radius, 3)
        self.assertEqual(a.list_threshold, 26)
        self.assertEqual(len(a.max_list_sizes), 20)
        self.assertEqual(sum(a.histogram.values()), 20)
        self.assertTrue(a.exact)
        self.assertNotIn("runtime_seconds", a.to_dict())
        self.assertIn("runtime_seconds", a.to_dict(include_runtime=True))

    def test_rate_zero(self):
        """Large slack drives the rate to 0: one codeword, always within L."""
        report = gv_list_experiment(2, 8, 0.5, 1.0, 5, seed=1)
        self.assertEqual(report.rate, 0.0)
        self.assertEqual(report.code_size, 1)
        self.assertEqual(report.max_list_sizes, [1] * 5)
        self.assertEqual(report.fraction_within_threshold, 1.0)

    def test_zero_trials(self):
        """No trials: empty distribution and no fraction."""
        report = gv_list_experiment(2, 8, 0.25, 0.2, 0, seed=1)
        self.assertEqual(report.max_list_sizes, [])
        self.assertIsNone(report.fraction_within_threshold)
        self.assertEqual(report.to_dict()["histogram"], {})

    def test_sampled_mode(self):
        """Sampled mode runs beyond the exhaustive guard and is marked inexact."""
        report = gv_list_experiment(2, 24, 0.5, 0.9, 2, seed=0, mode="sampled", centers=64)
        self.assertFalse(report.exact)
        self.assertEqual(len(report.max_list_sizes), 2)

    def test_guards(self):
        """Exhaustive search beyond the guard fails before any trial runs."""
        with self.assertRaises(SearchSpaceTooLarge):
            gv_list_experiment(2, 24, 0.5, 0.9, 1, seed=0)
        with self.assertRaises(DomainError):
            gv_list_experiment(2, 8, 1.5, 0.1, 1, seed=0)
        with self.assertRaises(DomainError):
            gv_list_experiment(2, 8, 0.5, 0.1, -1, seed=0)

    def test_guards_do_not_sample(self):
        """Guard checks use the code size directly and draw no code."""
        with mock.patch("pairsuite.experiments.sample_random_code") as sampler:
            report = gv_list_experiment(2, 12, 0.25, 0.15, 0, seed=7)
            with self.assertRaises(SearchSpaceTooLarge):
                gv_list_experiment(2, 24, 0.5, 0.9, 1, seed=0)
        sampler.assert_not_called()
        self.assertEqual(report.code_size, code_size(2, 12, report.rate))

    def test_invalid_workers_and_centres(self):
        """Thread and centre counts below one are domain errors."""
        with self.assertRaises(DomainError):
            gv_list_experiment(2, 8, 0.25, 0.2, 1, seed=0, threads=0)
        with self.assertRaises(DomainError):
            gv_list_experiment(2, 8, 0.25, 0.2, 1, seed=0, mode="sampled", centers=0)
        with self.assertRaises(DomainError):
            max_list_size(_code(2, 4, [[0, 0, 0, 0]]), 1, mode="sampled", centers=-5)

    def test_code_and_centre_seeds_independent(self):
        """Sampled centres are not a replay of the codewords."""
        for trial_seed in trial_seeds(123, 4):
            code_seed, centre_seed = split_trial_seed(trial_seed)
            self.assertNotEqual(code_seed, centre_seed)
            code = sample_random_code(2, 24, 0.25, code_seed)
            centres = np.random.default_rng(centre_seed).integers(0, 2, size=(code.size, 24), dtype=np.int64)
            self.assertFalse(np.array_equal(centres, code.words))

    def test_sampled_below_exhaustive_per_trial(self):
        """Both modes audit the same codes and sampled never exceeds exhaustive."""
        exact = gv_list_experiment(2, 12, 0.25, 0.15, 10, seed=3)
        sampled = gv_list_experiment(2, 12, 0.25, 0.15, 10, seed=3, mode="sampled", centers=256)
        self.assertEqual(exact.trial_seeds, sampled.trial_seeds)
        for low, high in zip(sampled.max_list_sizes, exact.max_list_sizes):
            self.assertLessEqual(low, high)


if __name__ == "__main__":
    unittest.main()
