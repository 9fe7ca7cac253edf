"""
The symbol-pair read vector, pair distance and weight, and exact symbol-pair
ball sizes (closed form, log domain, and an enumeration oracle).

Words are 1-D ``galois.FieldArray`` vectors of length n >= 2. The vectorised
helpers (``pair_distances``, ``iter_space``) work on integer representations,
since the pair metric only ever compares symbols for equality.
"""

import logging
import math
from typing import Iterator, Tuple

import galois
import numpy as np
from scipy.special import gammaln, logsumexp

from .config import get_config
from .exceptions import (
    DomainError,
    FieldMismatch,
    LengthMismatch,
    LengthTooShort,
    SearchSpaceTooLarge,
)

logger = logging.getLogger(__name__)

Word = galois.FieldArray
PairView = galois.FieldArray


def _check_word(x) -> Word:
    if not isinstance(x, galois.FieldArray) or x.ndim != 1:
        raise DomainError(f"Expected a 1-D field vector, got {type(x).__name__}")
    if x.size < 2:
        raise LengthTooShort(f"Pair reads need length n >= 2, got n={x.size}")
    return x


def _check_pair(x, y) -> None:
    _check_word(x)
    _check_word(y)
    if type(x) is not type(y):
        raise FieldMismatch(f"Words over {type(x).name} and {type(y).name}")
    if x.size != y.size:
        raise LengthMismatch(f"Word lengths differ: {x.size} != {y.size}")


def as_ints(x) -> np.ndarray:
    """Integer representation of a field array (or pass-through for integer arrays)."""
    if isinstance(x, galois.FieldArray):
        return np.asarray(x.view(np.ndarray), dtype=np.int64)
    return np.asarray(x, dtype=np.int64)


def pair_distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Pair distances between integer word arrays, broadcasting over leading axes.

    Position i of the pair read differs iff x_i or x_{i+1 mod n} differs.
    """
    diff = np.asarray(a) != np.asarray(b)
    return np.count_nonzero(diff | np.roll(diff, -1, axis=-1), axis=-1)


def pair_weights(a: np.ndarray) -> np.ndarray:
    """Pair weights of integer word arrays along the last axis."""
    return pair_distances(a, 0)


def pair_read(x: Word) -> PairView:
    """
    Symbol-pair read vector [(x_0,x_1), (x_1,x_2), ..., (x_{n-1},x_0)].

    Returns:
        Field array of shape (n, 2)

    Raises:
        LengthTooShort: If n < 2
    """
    _check_word(x)
    n = x.size
    view = type(x).Zeros((n, 2))
    view[:, 0] = x
    view[:, 1] = x[(np.arange(n) + 1) % n]
    return view


def pair_distance(x: Word, y: Word) -> int:
    """
    Pair distance d_P(x, y) = d_H(pi(x), pi(y)).

    Raises:
        FieldMismatch, LengthMismatch, LengthTooShort
    """
    _check_pair(x, y)
    return int(pair_distances(as_ints(x), as_ints(y)))


def pair_weight(x: Word) -> int:
    """Pair weight wt_P(x) = d_P(x, 0)."""
    _check_word(x)
    return int(pair_weights(as_ints(x)))


def hamming_distance(x: Word, y: Word) -> int:
    _check_pair(x, y)
    return int(np.count_nonzero(as_ints(x) != as_ints(y)))


def hamming_weight(x: Word) -> int:
    _check_word(x)
    return int(np.count_nonzero(as_ints(x)))


def cyclic_shift(x: Word, s: int = 1) -> Word:
    """Cyclic shift x -> (x_s, x_{s+1}, ..., x_{s-1})."""
    _check_word(x)
    n = x.size
    return x[(np.arange(n) + s) % n]


def run_profile(x: Word) -> Tuple[int, int]:
    """
    Hamming weight and number of maximal cyclic runs of nonzero coordinates.

    For 0 < h < n, wt_P(x) = h + r. The all-nonzero word is a single run
    (h = n, r = 1) but has pair weight n.

    Returns:
        (h, r)
    """
    _check_word(x)
    nonzero = as_ints(x) != 0
    h = int(np.count_nonzero(nonzero))
    if h == 0:
        return 0, 0
    if h == x.size:
        return h, 1
    starts = nonzero & ~np.roll(nonzero, 1)
    return h, int(np.count_nonzero(starts))


def runs_count(n: int, ell: int, w: int) -> int:
    """
    D(n, l, w): number of binary cyclic patterns of length n and weight l
    with exactly w maximal runs of ones, (n/w) C(l-1, w-1) C(n-l-1, w-1).

    Raises:
        DomainError: Unless n >= 2 and 1 <= w <= l <= n - 1
    """
    if n < 2 or not 1 <= w <= ell <= n - 1:
        raise DomainError(f"runs_count needs n >= 2 and 1 <= w <= l <= n-1, got ({n}, {ell}, {w})")
    numerator = n * math.comb(ell - 1, w - 1) * math.comb(n - ell - 1, w - 1)
    quotient, remainder = divmod(numerator, w)
    assert remainder == 0, f"D({n},{ell},{w}) not integral"
    return quotient


def _check_ball_args(n: int, q: int, r: int) -> None:
    if n < 2:
        raise DomainError(f"Ball size needs n >= 2, got n={n}")
    if q < 2:
        raise DomainError(f"Ball size needs q >= 2, got q={q}")
    if not 0 <= r <= n:
        raise DomainError(f"Radius must satisfy 0 <= r <= n={n}, got r={r}")


def ball_size_exact(n: int, q: int, r: int, full_weight_correction: bool = True) -> int:
    """
    |B_P(x, r)| for any centre x, as an exact integer.

        1 + sum_{i=1}^{r} sum_{k=ceil(i/2)}^{i-1} D(n, k, i-k) (q-1)^k  [+ (q-1)^n if r >= n]

    The double sum only counts words with 0 < wt_H < n; the all-nonzero words
    (pair weight exactly n) are added by the full-weight correction term.
    ``full_weight_correction=False`` reproduces the bare sum.

    Raises:
        DomainError: Unless n >= 2, q >= 2 and 0 <= r <= n
    """
    _check_ball_args(n, q, r)
    total = 1
    for i in range(1, r + 1):
        for k in range((i + 1) // 2, i):
            if k > n - 1:
                continue
            total += runs_count(n, k, i - k) * (q - 1) ** k
    if full_weight_correction and r >= n:
        total += (q - 1) ** n
    return total


def _log_comb(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return gammaln(a + 1) - gammaln(b + 1) - gammaln(a - b + 1)


def ball_size_log(n: int, q: int, delta: float) -> float:
    """
    log_q |B_P(x, floor(delta n))| evaluated in the log domain.

    Same sum as ``ball_size_exact`` (including the full-weight term), with
    log-gamma binomials and log-sum-exp accumulation, for n far beyond the
    reach of the exact path.

    Raises:
        DomainError: Unless n >= 2, q >= 2 and 0 <= delta <= 1
    """
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"Relative radius must lie in [0, 1], got {delta}")
    r = min(n, int(math.floor(delta * n + 1e-9)))
    _check_ball_args(n, q, r)
    if r == 0:
        return 0.0

    # runs w = i - k and Hamming weight k with k + w <= r, 1 <= w <= k <= n-1, w <= n-k
    k_grid, w_grid = np.meshgrid(np.arange(1, n), np.arange(1, n), indexing="ij")
    mask = (w_grid <= k_grid) & (k_grid + w_grid <= r) & (w_grid <= n - k_grid)
    k = k_grid[mask].astype(float)
    w = w_grid[mask].astype(float)

    log_terms = [np.zeros(1)]
    if k.size:
        log_q1 = math.log(q - 1) if q > 2 else 0.0
        log_d = math.log(n) - np.log(w) + _log_comb(k - 1, w - 1) + _log_comb(n - k - 1, w - 1)
        log_terms.append(log_d + k * log_q1)
    if r >= n:
        log_terms.append(np.array([n * (math.log(q - 1) if q > 2 else 0.0)]))

    return float(logsumexp(np.concatenate(log_terms)) / math.log(q))


def iter_space(q: int, n: int, chunk: int = 1 << 16) -> Iterator[np.ndarray]:
    """
    Enumerate F_q^n as integer arrays in lexicographic order, ``chunk`` rows at a time.

    Yields:
        int64 arrays of shape (rows, n)
    """
    total = q ** n
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, np.newaxis] // powers[np.newaxis, :]) % q


def ball_size_enumerated(n: int, q: int, r: int) -> int:
    """
    |B_P(0, r)| by counting every word of F_q^n with pair weight <= r.

    Raises:
        SearchSpaceTooLarge: If q^n exceeds the ball-enumeration guard
    """
    _check_ball_args(n, q, r)
    limit = get_config().guard("ball_enumeration")
    if q ** n > limit:
        raise SearchSpaceTooLarge(f"q^n = {q}^{n} exceeds the enumeration guard {limit}")
    return sum(int(np.count_nonzero(pair_weights(block) <= r)) for block in iter_space(q, n))


def ball_enumerate(center: Word, r: int) -> Iterator[Word]:
    """
    Stream every word at pair distance <= r from ``center``, each exactly once.

    Raises:
        DomainError: Unless 0 <= r <= n
        SearchSpaceTooLarge: If q^n exceeds the ball-enumeration guard
    """
    _check_word(center)
    GF = type(center)
    q, n = GF.order, center.size
    _check_ball_args(n, q, r)
    limit = get_config().guard("ball_enumeration")
    if q ** n > limit:
        raise SearchSpaceTooLarge(f"q^n = {q}^{n} exceeds the enumeration guard {limit}")

    center_ints = as_ints(center)
    for block in iter_space(q, n):
        inside = pair_distances(block, center_ints) <= r
        for row in block[inside]:
            yield GF(row)
