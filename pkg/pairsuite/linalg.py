"""
Dense linear algebra over F_q.

Reduced row-echelon forms come from ``galois`` (``FieldArray.row_reduce``);
this module adds pivot bookkeeping, null-space bases in free-variable order
and affine solving, which the decoder needs in a reproducible form.
"""

from typing import List, Optional, Tuple

import galois
import numpy as np


def row_reduce(A: galois.FieldArray, n_pivot_cols: Optional[int] = None) -> Tuple[galois.FieldArray, List[int]]:
    """Reduce a matrix to reduced row-echelon form over its field.

    Args:
        A: Matrix (m x n) over F_q.
        n_pivot_cols: Only search for pivots in the first *n_pivot_cols*
            columns. Row operations still apply to the full row width.
            Defaults to all columns.

    Returns:
        (R, pivot_cols):
            R -- reduced row-echelon form, shape (m, n).
            pivot_cols -- pivot column indices (length = rank).
    """
    n = A.shape[1]
    if n_pivot_cols is None:
        n_pivot_cols = n
    if A.shape[0] == 0 or n_pivot_cols == 0:
        return A.copy(), []

    R = A.row_reduce(ncols=n_pivot_cols)

    pivot_cols: List[int] = []
    for row in R:
        nonzero = np.flatnonzero(row[:n_pivot_cols] != 0)
        if nonzero.size == 0:
            break
        pivot_cols.append(int(nonzero[0]))
    return R, pivot_cols


def rank(A: galois.FieldArray) -> int:
    """Rank of a matrix over its field."""
    _, pivot_cols = row_reduce(A)
    return len(pivot_cols)


def _kernel_from_rref(R: galois.FieldArray, pivot_cols: List[int], n: int) -> galois.FieldArray:
    GF = type(R)
    pivots = set(pivot_cols)
    free_cols = [c for c in range(n) if c not in pivots]
    basis = GF.Zeros((len(free_cols), n))
    for i, free in enumerate(free_cols):
        basis[i, free] = 1
        for row, pc in enumerate(pivot_cols):
            basis[i, pc] = -R[row, free]
    return basis


def null_space(A: galois.FieldArray) -> galois.FieldArray:
    """Right null-space basis of A, one basis vector per row, ordered by free column.

    Returns:
        FieldArray of shape (n - rank, n); zero rows when A has full column rank.
    """
    R, pivot_cols = row_reduce(A)
    return _kernel_from_rref(R, pivot_cols, A.shape[1])


def solve_affine(A: galois.FieldArray, b: galois.FieldArray) -> Tuple[Optional[galois.FieldArray], galois.FieldArray]:
    """Solve A x = b.

    Args:
        A: Matrix (m x n).
        b: Right-hand side of length m.

    Returns:
        (x0, kernel): a particular solution (free variables set to zero), or
        None when the system is inconsistent, together with a basis of the
        null space of A. Every solution is x0 plus a combination of kernel rows.
    """
    GF = type(A)
    m, n = A.shape
    augmented = GF.Zeros((m, n + 1))
    augmented[:, :n] = A
    augmented[:, n] = b

    R, pivot_cols = row_reduce(augmented, n_pivot_cols=n)
    kernel = _kernel_from_rref(R[:, :n], pivot_cols, n)

    if np.any(R[len(pivot_cols):, n] != 0):
        return None, kernel

    x0 = GF.Zeros(n)
    for row, pc in enumerate(pivot_cols):
        x0[pc] = R[row, n]
    return x0, kernel
