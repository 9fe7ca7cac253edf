#!/usr/bin/env python3
"""
Test suite for Gauss-Jordan elimination over F_q.
"""

import unittest
from pathlib import Path
import sys

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from pairsuite.fields import field_for_order
from pairsuite.linalg import null_space, rank, row_reduce, solve_affine


class TestRowReduce(unittest.TestCase):
    """Test reduced row-echelon form, rank and null spaces."""

    def setUp(self):
        self.GF = field_for_order(7).GF
        self.rng = np.random.default_rng(11)

    def test_identity(self):
        """Identity is already reduced with full rank."""
        I = self.GF.Identity(4)
        R, pivots = row_reduce(I)
        self.assertTrue(np.all(R == I))
        self.assertEqual(pivots, [0, 1, 2, 3])
        self.assertEqual(rank(I), 4)

    def test_zero_matrix(self):
        """The zero matrix has rank 0 and the whole space as null space."""
        Z = self.GF.Zeros((3, 5))
        self.assertEqual(rank(Z), 0)
        self.assertEqual(null_space(Z).shape, (5, 5))

    def test_pivots_are_unit_columns(self):
        """Pivot columns of the reduced form are unit vectors."""
        A = self.GF.Random((5, 8), seed=self.rng)
        R, pivots = row_reduce(A)
        for row, col in enumerate(pivots):
            expected = self.GF.Zeros(5)
            expected[row] = 1
            self.assertTrue(np.all(R[:, col] == expected))

    def test_rank_nullity(self):
        """rank + nullity = number of columns and A v = 0 for every basis row."""
        for q in (2, 4, 7, 16):
            GF = field_for_order(q).GF
            for shape in [(3, 6), (6, 3), (5, 5)]:
                A = GF.Random(shape, seed=self.rng)
                A[-1] = A[0] + A[1]  # force a dependency
                basis = null_space(A)
                self.assertEqual(rank(A) + basis.shape[0], shape[1])
                if basis.shape[0]:
                    self.assertTrue(np.all(A @ basis.T == 0))
                    self.assertEqual(rank(basis), basis.shape[0])

    def test_agrees_with_galois(self):
        """Rank agrees with galois' own matrix rank."""
        for _ in range(10):
            A = self.GF.Random((4, 6), seed=self.rng)
            A[3] = 2 * A[0] + A[2]
            self.assertEqual(rank(A), np.linalg.matrix_rank(A))

    def test_deterministic(self):
        """Repeated reduction yields the same basis."""
        A = self.GF.Random((4, 9), seed=self.rng)
        self.assertTrue(np.all(null_space(A) == null_space(A)))


class TestSolveAffine(unittest.TestCase):
    """Test affine solving."""

    def setUp(self):
        self.GF = field_for_order(5).GF
        self.rng = np.random.default_rng(12)

    def test_consistent_system(self):
        """A particular solution satisfies A x = b, and so do its kernel translates."""
        A = self.GF.Random((4, 6), seed=self.rng)
        x = self.GF.Random(6, seed=self.rng)
        b = A @ x
        x0, kernel = solve_affine(A, b)
        self.assertIsNotNone(x0)
        self.assertTrue(np.all(A @ x0 == b))
        for row in kernel:
            self.assertTrue(np.all(A @ (x0 + 3 * row) == b))

    def test_inconsistent_system(self):
        """x + 0y = 0 and x + 0y = 1 has no solution."""
        A = self.GF([[1, 0], [1, 0]])
        b = self.GF([0, 1])
        x0, kernel = solve_affine(A, b)
        self.assertIsNone(x0)
        self.assertEqual(kernel.shape, (1, 2))

    def test_unique_solution(self):
        """Invertible systems have an empty kernel."""
        A = self.GF([[1, 2], [3, 4]])
        b = self.GF([1, 1])
        x0, kernel = solve_affine(A, b)
        self.assertEqual(kernel.shape[0], 0)
        self.assertTrue(np.all(A @ x0 == b))


if __name__ == "__main__":
    unittest.main()
