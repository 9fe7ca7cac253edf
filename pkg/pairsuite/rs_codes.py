"""
Reed-Solomon codes at evaluation points 1, gamma, ..., gamma^{n-1}, their
2-folded view, minimum pair distance (witness and exhaustive search), and the
pair-error channel.

Messages are polynomials of degree <= k - 1; as coefficient vectors they are
written in ascending degree order.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import galois
import numpy as np

from .config import get_config
from .exceptions import (
    DegreeTooLarge,
    DomainError,
    FieldMismatch,
    LengthTooShort,
    ParameterError,
    SearchSpaceTooLarge,
)
from .fields import Field, field_for_order
from .pair_metric import Word, as_ints, iter_space, pair_weights

logger = logging.getLogger(__name__)

FoldedWord = galois.FieldArray


@dataclass(frozen=True)
class CodeSpec:
    """
    RS[n, k] over F_q with evaluation points gamma^0, ..., gamma^{n-1}.

    The points are distinct only for n <= q - 1, so that is enforced.
    """

    field: Field
    n: int
    k: int

    def __post_init__(self):
        q = self.field.order
        if not 1 <= self.k <= self.n <= q - 1:
            raise ParameterError(f"RS parameters need 1 <= k <= n <= q-1, got q={q}, n={self.n}, k={self.k}")

    @classmethod
    def new(cls, q: int, n: int, k: int) -> "CodeSpec":
        return cls(field_for_order(q), int(n), int(k))

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def gamma(self) -> galois.FieldArray:
        return self.field.gamma

    @property
    def GF(self):
        return self.field.GF

    @property
    def evaluation_points(self) -> galois.FieldArray:
        return self.gamma ** np.arange(self.n)

    def generator_matrix(self) -> galois.FieldArray:
        """k x n matrix whose row j holds the evaluations of x^j."""
        return self.evaluation_points[np.newaxis, :] ** np.arange(self.k)[:, np.newaxis]

    def __str__(self) -> str:
        return f"RS[{self.n},{self.k}] over GF({self.q})"


def message_to_poly(spec: CodeSpec, coeffs: Sequence[int]) -> galois.Poly:
    """
    Message polynomial from ascending coefficients.

    Raises:
        DegreeTooLarge: If the polynomial has degree above k - 1
    """
    f = spec.field.poly(coeffs)
    if f.degree > spec.k - 1:
        raise DegreeTooLarge(f"deg f = {f.degree} exceeds k-1 = {spec.k - 1}")
    return f


def poly_to_message(spec: CodeSpec, f: galois.Poly) -> Tuple[int, ...]:
    """Ascending coefficient tuple of length k."""
    coeffs = [int(c) for c in f.coeffs[::-1]]
    return tuple(coeffs + [0] * (spec.k - len(coeffs)))


def rs_encode(spec: CodeSpec, f: galois.Poly) -> Word:
    """
    c_f = (f(1), f(gamma), ..., f(gamma^{n-1})).

    Raises:
        DegreeTooLarge: If deg f > k - 1
        FieldMismatch: If f is not over the code's field
    """
    if f.field is not spec.GF:
        raise FieldMismatch(f"Polynomial over {f.field.name}, code over {spec.GF.name}")
    if f.degree > spec.k - 1:
        raise DegreeTooLarge(f"deg f = {f.degree} exceeds k-1 = {spec.k - 1}")
    return f(spec.evaluation_points)


def fold2(x: Word) -> FoldedWord:
    """
    2 x (n-1) array whose column i is (x_{i-1}, x_i), i = 1..n-1.

    This is the pair read without the wraparound pair, so Hamming distance
    between folded words never exceeds pair distance between the words.

    Raises:
        LengthTooShort: If n < 2
    """
    if x.ndim != 1 or x.size < 2:
        raise LengthTooShort(f"Folding needs n >= 2, got shape {x.shape}")
    folded = type(x).Zeros((2, x.size - 1))
    folded[0] = x[:-1]
    folded[1] = x[1:]
    return folded


def unfold(folded: FoldedWord) -> Word:
    """
    Inverse of fold2.

    Raises:
        ParameterError: If the columns do not overlap consistently
    """
    if folded.ndim != 2 or folded.shape[0] != 2:
        raise ParameterError(f"Folded word must have shape (2, n-1), got {folded.shape}")
    if np.any(folded[0, 1:] != folded[1, :-1]):
        raise ParameterError("Folded columns do not overlap consistently")
    x = type(folded).Zeros(folded.shape[1] + 1)
    x[:-1] = folded[0]
    x[-1] = folded[1, -1]
    return x


def frs_encode(spec: CodeSpec, f: galois.Poly) -> FoldedWord:
    """FRS[n-1, k] codeword of f: the fold of its RS codeword."""
    return fold2(rs_encode(spec, f))


def min_pair_distance_witness(spec: CodeSpec) -> Tuple[galois.Poly, Word]:
    """
    f = prod_{i=0}^{k-2} (x - gamma^i) and its codeword, which has Hamming
    weight n - k + 1 and pair weight n - k + 2 (the zeros form one run).

    Raises:
        DomainError: Unless 2 <= k < n
    """
    if not 2 <= spec.k < spec.n:
        raise DomainError(f"Witness needs 2 <= k < n, got n={spec.n}, k={spec.k}")
    f = galois.Poly.Roots(spec.evaluation_points[:spec.k - 1])
    return f, rs_encode(spec, f)


def all_messages(spec: CodeSpec) -> Iterator[np.ndarray]:
    """
    All q^k messages as ascending coefficient rows, lexicographically.

    Raises:
        SearchSpaceTooLarge: If q^k exceeds the message-search guard
    """
    limit = get_config().guard("message_search")
    if spec.q ** spec.k > limit:
        raise SearchSpaceTooLarge(f"q^k = {spec.q}^{spec.k} exceeds the message-search guard {limit}")
    yield from iter_space(spec.q, spec.k)


def codebook(spec: CodeSpec) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    """
    All (message, codeword) pairs as integer arrays, in lexicographic message order.

    Yields:
        (messages, codewords) blocks of shapes (rows, k) and (rows, n)
    """
    generator = spec.generator_matrix()
    for block in all_messages(spec):
        yield block, as_ints(spec.GF(block) @ generator)


def min_pair_distance_exhaustive(spec: CodeSpec) -> int:
    """
    Minimum pair weight over all nonzero codewords (the code is linear).

    Raises:
        SearchSpaceTooLarge: If q^k exceeds the message-search guard
    """
    best = None
    for messages, words in codebook(spec):
        weights = pair_weights(words)
        nonzero = np.any(messages != 0, axis=1)
        if np.any(nonzero):
            block_min = int(weights[nonzero].min())
            best = block_min if best is None else min(best, block_min)
    logger.debug(f"Exhaustive minimum pair distance of {spec}: {best}")
    return best


def _composition(total: int, parts: int, rng: np.random.Generator) -> np.ndarray:
    """Uniformly random composition of ``total`` into ``parts`` positive integers."""
    if parts == 1:
        return np.array([total])
    cuts = np.sort(rng.choice(np.arange(1, total), size=parts - 1, replace=False))
    return np.diff(np.concatenate(([0], cuts, [total])))


def error_shape(n: int, t: int, mode: str = "spread") -> Tuple[int, int]:
    """
    (h, r) with h + r = t: h corrupted symbols in r pairwise non-adjacent cyclic runs.

    ``spread`` maximises r (r = floor(t/2)); ``burst`` uses one run.
    """
    if mode == "spread":
        r = t // 2
    elif mode == "burst":
        r = 1
    else:
        raise DomainError(f"Unknown error mode: {mode}")
    return t - r, r


def inject_pair_errors(x: Word, t: int, rng: np.random.Generator, mode: str = "spread") -> Word:
    """
    Corrupt x with a pair-error budget t.

    For 2 <= t <= n the error pattern has h nonzero symbols in r runs
    separated by zeros with h + r = t, so d_P(x, y) = t exactly. A budget of
    1 cannot be met by any nonzero error and leaves x unchanged.

    Args:
        x: Transmitted word
        t: Pair-error budget, 0 <= t <= n
        rng: Seeded generator
        mode: "spread" (many short runs) or "burst" (one run)

    Raises:
        DomainError: If t lies outside [0, n]
    """
    n = x.size
    if not 0 <= t <= n:
        raise DomainError(f"Pair-error budget must satisfy 0 <= t <= n={n}, got {t}")
    if t < 2:
        return x.copy()

    h, r = error_shape(n, t, mode)
    runs = _composition(h, r, rng)
    gaps = _composition(n - h, r, rng)

    support = []
    position = int(rng.integers(n))
    for run, gap in zip(runs, gaps):
        support.extend((position + offset) % n for offset in range(int(run)))
        position += int(run) + int(gap)

    GF = type(x)
    error = GF.Zeros(n)
    error[np.array(support)] = GF.Random(h, low=1, seed=rng)
    logger.debug(f"Injected {h} symbol errors in {r} runs (pair budget {t})")
    return x + error
