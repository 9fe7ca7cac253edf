"""
List decoding of Reed-Solomon codes under the symbol-pair metric.

The received word is folded into overlapping pairs, a trivariate polynomial
Q(x, y1, y2) = a0(x) + a1(x) y1 + a2(x) y2 is interpolated through the
columns, and the message polynomials are recovered as the roots of
a0 + a1 z + a2 z^q in L = F_q[X]/(X^{q-1} - gamma). Because f(gamma X) = f(X)^q
in L, every message whose codeword agrees with enough columns is such a root.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import galois
import numpy as np

from .bounds import johnson_radius
from .exceptions import (
    DomainError,
    FieldMismatch,
    LengthMismatch,
    ParameterError,
    RadiusNonpositive,
)
from .fields import BigField, big_field_new
from .linalg import null_space, solve_affine
from .pair_metric import Word, as_ints, pair_distance, pair_distances
from .rs_codes import (
    CodeSpec,
    FoldedWord,
    codebook,
    fold2,
    inject_pair_errors,
    poly_to_message,
    rs_encode,
)

logger = logging.getLogger(__name__)

COMPLETENESS_NOT_GUARANTEED = "completeness-not-guaranteed"


def decode_radius(spec: CodeSpec) -> int:
    """
    Absolute pair-error budget floor((2/3)(n - 2 - k)).

    Raises:
        RadiusNonpositive: If n < k + 3
    """
    radius = (2 * (spec.n - 2 - spec.k)) // 3
    if radius <= 0:
        raise RadiusNonpositive(f"{spec} has decoding radius {radius}; need n >= k + 3")
    return radius


def interpolation_degree(spec: CodeSpec) -> int:
    """m = ceil((n - k)/3)."""
    return -(-(spec.n - spec.k) // 3)


def degree_chain_holds(spec: CodeSpec, radius: int) -> bool:
    """Agreement count n - 1 - radius exceeds deg Q(x, f(x), f(gamma x)) <= m + k - 1."""
    return spec.n - 1 - radius > interpolation_degree(spec) + spec.k - 1


@dataclass
class InterpolationResult:
    a0: galois.Poly
    a1: galois.Poly
    a2: galois.Poly
    m: int
    nullspace_dim: int
    rank: int

    def residuals(self, spec: CodeSpec, folded: FoldedWord) -> galois.FieldArray:
        """Q evaluated at every column (gamma^{i-1}, y_{i-1}, y_i); all zero by construction."""
        alphas = spec.evaluation_points[:folded.shape[1]]
        return self.a0(alphas) + self.a1(alphas) * folded[0] + self.a2(alphas) * folded[1]


def _constraint_matrix(spec: CodeSpec, folded: FoldedWord, m: int) -> galois.FieldArray:
    GF = spec.GF
    rows = folded.shape[1]
    alphas = spec.evaluation_points[:rows]
    width0, width = m + spec.k, m + 1

    matrix = GF.Zeros((rows, width0 + 2 * width))
    matrix[:, :width0] = alphas[:, np.newaxis] ** np.arange(width0)[np.newaxis, :]
    powers = alphas[:, np.newaxis] ** np.arange(width)[np.newaxis, :]
    matrix[:, width0:width0 + width] = folded[0][:, np.newaxis] * powers
    matrix[:, width0 + width:] = folded[1][:, np.newaxis] * powers
    return matrix


def interpolate(spec: CodeSpec, folded: FoldedWord) -> InterpolationResult:
    """
    Find a nonzero (a0, a1, a2) with deg a0 <= m + k - 1, deg a1, deg a2 <= m and
    Q(gamma^{i-1}, y_{i-1}, y_i) = 0 for every folded column i = 1..n-1.

    There are 3m + k + 2 unknowns and n - 1 equations, so a nonzero solution
    always exists; the first null-space basis vector is returned.

    Raises:
        ParameterError: If the folded word has the wrong shape or field, or the
            degree bounds do not fit below q - 1
    """
    if type(folded) is not spec.GF or folded.shape != (2, spec.n - 1):
        raise ParameterError(f"Folded word for {spec} must have shape (2, {spec.n - 1}) over GF({spec.q})")
    m = interpolation_degree(spec)
    if m + spec.k - 1 >= spec.q - 1:
        raise ParameterError(f"deg a0 <= {m + spec.k - 1} does not fit below q - 1 = {spec.q - 1}")

    matrix = _constraint_matrix(spec, folded, m)
    basis = null_space(matrix)
    if basis.shape[0] == 0:
        raise ParameterError("Interpolation system has only the trivial solution")
    vector = basis[0]

    width0 = m + spec.k
    return InterpolationResult(
        a0=galois.Poly(vector[:width0], order="asc"),
        a1=galois.Poly(vector[width0:width0 + m + 1], order="asc"),
        a2=galois.Poly(vector[width0 + m + 1:], order="asc"),
        m=m,
        nullspace_dim=basis.shape[0],
        rank=matrix.shape[1] - basis.shape[0],
    )


def _sort_key(z: galois.FieldArray) -> Tuple[int, ...]:
    return tuple(int(c) for c in z)


def solve_linearized(a0: galois.Poly, a1: galois.Poly, a2: galois.Poly, L: BigField) -> List[galois.FieldArray]:
    """
    Every z in L with a0 + a1 z + a2 z^q = 0.

    z -> a1 z + a2 z^q is F_q-linear, so the equation is an affine system over
    F_q of size (q - 1) x (q - 1). The kernel of a nonzero linearized map has
    dimension at most 1, giving 0, 1 or q solutions.

    Returns:
        Solutions as coefficient vectors, sorted lexicographically

    Raises:
        ParameterError: If all three polynomials are zero, or the kernel has
            dimension above 1 (a1 z + a2 z^q has at most q roots otherwise)
    """
    c0, c1, c2 = L.reduce(a0), L.reduce(a1), L.reduce(a2)
    if not (np.any(c0) or np.any(c1) or np.any(c2)):
        raise ParameterError("Root finding needs (a0, a1, a2) not all zero")

    matrix = L.linearized_matrix(c1, c2)
    particular, kernel = solve_affine(matrix, -c0)
    if particular is None:
        return []
    if kernel.shape[0] == 0:
        return [particular]
    if kernel.shape[0] > 1:
        raise ParameterError(f"Linearized map has kernel dimension {kernel.shape[0]} > 1")

    solutions = [particular + c * kernel[0] for c in L.GF.elements]
    return sorted(solutions, key=_sort_key)


@dataclass
class Candidate:
    poly: galois.Poly
    message: Tuple[int, ...]
    codeword: Word
    distance: int


@dataclass
class DecodeResult:
    """
    Output list of ``list_decode`` plus the radius and decoder diagnostics.

    Diagnostics keys: ``m``, ``nullspace_dim``, ``rank``, ``roots``
    (solutions in L), ``low_degree_roots`` (lifted with deg <= k - 1),
    ``listed`` (within the radius) and ``flags``.
    """

    candidates: List[Candidate]
    radius: int
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.candidates)

    @property
    def messages(self) -> List[Tuple[int, ...]]:
        return [c.message for c in self.candidates]

    @property
    def flags(self) -> List[str]:
        return list(self.diagnostics.get("flags", []))

    def contains(self, spec: CodeSpec, f: galois.Poly) -> bool:
        return poly_to_message(spec, f) in self.messages


def _check_received(spec: CodeSpec, y: Word) -> None:
    if not isinstance(y, galois.FieldArray) or type(y) is not spec.GF:
        raise FieldMismatch(f"Received word must be over GF({spec.q})")
    if y.ndim != 1 or y.size != spec.n:
        raise LengthMismatch(f"Received word has length {y.size}, code length is {spec.n}")


def list_decode(spec: CodeSpec, y: Word, radius: Optional[int] = None) -> DecodeResult:
    """
    All messages f (deg f <= k - 1) with d_P(c_f, y) <= radius.

    With the default radius (``decode_radius``) the list is complete: a codeword
    within the pair budget agrees with at least n - 1 - radius folded columns,
    which exceeds the degree of Q(x, f(x), f(gamma x)), so that polynomial
    vanishes and f is a root in L. A larger explicit radius still decodes but
    is flagged ``completeness-not-guaranteed``. Every candidate is re-encoded
    and filtered by its actual pair distance.

    Args:
        spec: Code parameters (n <= q - 1)
        y: Received word of length n
        radius: Absolute pair radius; defaults to ``decode_radius(spec)``

    Returns:
        DecodeResult with candidates sorted by ascending coefficient tuple

    Raises:
        RadiusNonpositive: If no radius is given and n < k + 3, or radius < 0
        ParameterError: For infeasible interpolation parameters
    """
    _check_received(spec, y)
    flags: List[str] = []
    if radius is None:
        radius = decode_radius(spec)
        assert degree_chain_holds(spec, radius), f"degree chain fails for {spec} at radius {radius}"
    elif radius < 0:
        raise RadiusNonpositive(f"Radius must be >= 0, got {radius}")
    elif radius > (2 * (spec.n - 2 - spec.k)) // 3 or not degree_chain_holds(spec, radius):
        flags.append(COMPLETENESS_NOT_GUARANTEED)
        logger.warning(f"Radius {radius} exceeds the guaranteed decoding radius of {spec}")

    folded = fold2(y)
    result = interpolate(spec, folded)
    L = big_field_new(spec.field)
    roots = solve_linearized(result.a0, result.a1, result.a2, L)

    candidates = []
    low_degree = 0
    for z in roots:
        if np.any(z[spec.k:]):
            continue
        low_degree += 1
        f = galois.Poly(z[:spec.k], order="asc")
        codeword = rs_encode(spec, f)
        distance = pair_distance(codeword, y)
        if distance <= radius:
            candidates.append(Candidate(f, poly_to_message(spec, f), codeword, distance))

    candidates.sort(key=lambda c: c.message)
    assert len(candidates) <= spec.q, f"list size {len(candidates)} exceeds q = {spec.q}"

    diagnostics = {
        "m": result.m,
        "nullspace_dim": result.nullspace_dim,
        "rank": result.rank,
        "roots": len(roots),
        "low_degree_roots": low_degree,
        "listed": len(candidates),
        "flags": flags,
    }
    logger.debug(f"Decoded {spec} at radius {radius}: {diagnostics}")
    return DecodeResult(candidates=candidates, radius=radius, diagnostics=diagnostics)


def exhaustive_decode(spec: CodeSpec, y: Word, radius: int) -> List[Tuple[int, ...]]:
    """
    Brute-force list {f : deg f <= k - 1, d_P(c_f, y) <= radius} over all q^k messages.

    Raises:
        SearchSpaceTooLarge: If q^k exceeds the message-search guard
    """
    _check_received(spec, y)
    target = as_ints(y)
    found = []
    for messages, words in codebook(spec):
        inside = pair_distances(words, target) <= radius
        found.extend(tuple(int(c) for c in row) for row in messages[inside])
    return sorted(found)


@dataclass(frozen=True)
class TrialOutcome:
    message: Tuple[int, ...]
    injected_distance: int
    contained: bool
    list_size: int
    sound: bool


def decoder_trial(spec: CodeSpec, t: int, rng: np.random.Generator, mode: str = "spread",
                  radius: Optional[int] = None) -> TrialOutcome:
    """Encode a uniform random message, inject a pair-error budget t, and list decode."""
    message = spec.field.random(spec.k, rng)
    f = galois.Poly(message, order="asc")
    x = rs_encode(spec, f)
    y = inject_pair_errors(x, t, rng, mode=mode)
    result = list_decode(spec, y, radius)
    return TrialOutcome(
        message=poly_to_message(spec, f),
        injected_distance=pair_distance(x, y),
        contained=result.contains(spec, f),
        list_size=len(result),
        sound=all(c.distance <= result.radius for c in result.candidates),
    )


def gap_holds(delta: float) -> bool:
    """(2/3) delta > 1 - sqrt(1 - delta); equality at delta = 3/4 counts as failure."""
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must lie in [0, 1], got {delta}")
    return 2 * delta / 3 - (1 - math.sqrt(1 - delta)) > 1e-12


@dataclass(frozen=True)
class MarginReport:
    q: int
    n: int
    k: int
    delta: float
    decoder_tau: float
    johnson_tau: float

    @property
    def margin(self) -> float:
        return self.decoder_tau - self.johnson_tau


def beyond_johnson_margin(spec: CodeSpec) -> MarginReport:
    """
    Decoder relative radius (2/3)(n-2-k)/n against the Johnson-type radius at
    relative pair distance delta = (n-k+2)/n.

    Raises:
        DomainError: Unless 1 + n/2 <= k < n
    """
    n, k = spec.n, spec.k
    if not (1 + n / 2 <= k < n):
        raise DomainError(f"Margin needs 1 + n/2 <= k < n, got n={n}, k={k}")
    delta = (n - k + 2) / n
    return MarginReport(
        q=spec.q,
        n=n,
        k=k,
        delta=delta,
        decoder_tau=2 * (n - 2 - k) / (3 * n),
        johnson_tau=johnson_radius(spec.q, delta),
    )

