"""
Closed-form and variational bounds for the pair metric: q-ary entropy, the
ball-volume exponent kappa_sp, Gilbert-Varshamov rates in both metrics,
Singleton, the upper bound on list-decoding radius, and the Johnson-type
radius and list size.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Union

import numpy as np
from scipy.optimize import root_scalar
from scipy.special import xlogy

from .config import get_config
from .exceptions import DomainError, NoSolution

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

_EPS = 1e-12


def entropy_q(q: int, x: ArrayLike) -> ArrayLike:
    """
    q-ary entropy H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with 0 log 0 = 0.

    Args:
        q: Alphabet size (>= 2)
        x: Scalar or array in [0, 1]

    Raises:
        DomainError: If q < 2 or any x lies outside [0, 1]
    """
    if q < 2:
        raise DomainError(f"Entropy needs q >= 2, got {q}")
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -_EPS) or np.any(arr > 1 + _EPS):
        raise DomainError(f"Entropy argument outside [0, 1]: {x}")
    arr = np.clip(arr, 0.0, 1.0)
    log_q = math.log(q)
    value = (arr * math.log(q - 1) - xlogy(arr, arr) - xlogy(1 - arr, 1 - arr)) / log_q
    if np.ndim(value) == 0:
        return float(value)
    return value


def kappa_objective(q: int, beta: ArrayLike, theta: ArrayLike) -> ArrayLike:
    """
    beta H_q((2 beta - theta)/beta) + (1 - beta) H_q((theta - beta)/(1 - beta)).

    Points on the edges beta = 0 and beta = 1 take the 0/0 ratio as 0, where
    the weighting factor vanishes anyway.
    """
    beta = np.asarray(beta, dtype=float)
    theta = np.asarray(theta, dtype=float)
    first = np.divide(2 * beta - theta, beta, out=np.zeros(np.broadcast(beta, theta).shape), where=beta > 0)
    second = np.divide(theta - beta, 1 - beta, out=np.zeros(np.broadcast(beta, theta).shape), where=beta < 1)
    first = np.clip(first, 0.0, 1.0)
    second = np.clip(second, 0.0, 1.0)
    value = beta * entropy_q(q, first) + (1 - beta) * entropy_q(q, second)
    if np.ndim(value) == 0:
        return float(value)
    return value


@dataclass(frozen=True)
class KappaResult:
    """kappa_sp(delta) with its maximiser (beta*, theta*)."""

    delta: float
    value: float
    beta: float
    theta: float
    tolerance: float


def _masked_objective(q: int, betas: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    # beta-major ordering so argmax ties break lexicographically on (beta, theta)
    B, T = np.meshgrid(betas, thetas, indexing="ij")
    feasible = (T / 2 <= B + _EPS) & (B <= T + _EPS)
    values = np.full(B.shape, -np.inf)
    values[feasible] = kappa_objective(q, B[feasible], T[feasible])
    return values


@lru_cache(maxsize=4096)
def _kappa_search(q: int, delta: float, tol: float, step: float, factor: int) -> KappaResult:
    if delta == 0.0:
        return KappaResult(delta=0.0, value=0.0, beta=0.0, theta=0.0, tolerance=0.0)

    points = max(2, int(math.ceil(delta / step)) + 1)
    grid = np.linspace(0.0, delta, points)
    values = _masked_objective(q, grid, grid)
    i, j = np.unravel_index(int(np.argmax(values)), values.shape)
    best_beta, best_theta, best_value = float(grid[i]), float(grid[j]), float(values[i, j])
    h = delta / (points - 1)

    while h > tol:
        betas = np.linspace(max(0.0, best_beta - h), min(delta, best_beta + h), 2 * factor + 1)
        thetas = np.linspace(max(0.0, best_theta - h), min(delta, best_theta + h), 2 * factor + 1)
        local = _masked_objective(q, betas, thetas)
        i, j = np.unravel_index(int(np.argmax(local)), local.shape)
        if local[i, j] > best_value:
            best_beta, best_theta, best_value = float(betas[i]), float(thetas[j]), float(local[i, j])
        h /= factor

    return KappaResult(delta=delta, value=best_value, beta=best_beta, theta=best_theta, tolerance=h)


def kappa_sp(q: int, delta: float, tol: Optional[float] = None) -> KappaResult:
    """
    kappa_sp(delta) = max over 0 <= theta/2 <= beta <= theta <= delta of the
    objective in ``kappa_objective``.

    Coarse grid over the triangular region, then local grid refinement around
    the incumbent (step divided by the refinement factor per round) until the
    step drops below ``tol``. Deterministic for fixed inputs.

    Args:
        q: Alphabet size
        delta: Relative pair radius in [0, 1]
        tol: Target grid resolution (>= 1e-9); defaults to bounds.kappa_tol

    Raises:
        DomainError: For delta outside [0, 1] or tol < 1e-9
    """
    settings = get_config().get_section("bounds")
    tol = settings["kappa_tol"] if tol is None else tol
    if tol < 1e-9:
        raise DomainError(f"Tolerance must be >= 1e-9, got {tol}")
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must lie in [0, 1], got {delta}")
    if q < 2:
        raise DomainError(f"kappa_sp needs q >= 2, got {q}")
    return _kappa_search(int(q), float(delta), float(tol),
                         float(settings["kappa_coarse_step"]), int(settings["kappa_refine_factor"]))


def _clamp(value: float, low: float = 0.0, high: float = 1.0) -> float:
    return min(high, max(low, value))


def gv_rate_pair(q: int, delta: float) -> float:
    """Pair-metric GV rate max(0, 1 - kappa_sp(delta))."""
    return _clamp(1.0 - kappa_sp(q, delta).value)


def gv_rate_hamming(q: int, delta: float) -> float:
    """Hamming-metric GV rate max(0, 1 - H_q(delta)); zero beyond delta = 1 - 1/q."""
    if delta >= 1 - 1 / q:
        return 0.0
    return _clamp(1.0 - entropy_q(q, delta))


def singleton_rate(delta: float) -> float:
    """Singleton rate 1 - delta (R + delta <= 1)."""
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must lie in [0, 1], got {delta}")
    return _clamp(1.0 - delta)


def singleton_size_check(n: int, M: int, d_p: int, q: int) -> bool:
    """
    Pair Singleton bound M <= q^{n - d_P + 2}.

    Raises:
        DomainError: Unless 2 <= d_P <= n
    """
    if not 2 <= d_p <= n:
        raise DomainError(f"Pair distance must satisfy 2 <= d_P <= n={n}, got {d_p}")
    return M <= q ** (n - d_p + 2)


def list_radius_upper(q: int, rate: float, tol: Optional[float] = None) -> float:
    """
    Largest relative radius tau allowing polynomial list size at rate R,
    i.e. the root of 1 - R - kappa_sp(tau) on [0, 1].

    Raises:
        NoSolution: If R is not in (0, 1)
    """
    if not 0.0 < rate < 1.0:
        raise NoSolution(f"Rate must lie strictly between 0 and 1, got {rate}")
    tol = get_config().get("bounds", "bisection_tol") if tol is None else tol

    target = 1.0 - rate

    def excess(tau: float) -> float:
        return kappa_sp(q, tau).value - target

    if excess(1.0) <= 0:
        return 1.0
    sol = root_scalar(excess, bracket=[0.0, 1.0], method="brentq", xtol=tol)
    logger.debug(f"list_radius_upper(q={q}, R={rate}) = {sol.root} after {sol.iterations} iterations")
    return float(sol.root)


def johnson_radius(q: int, delta: float) -> float:
    """
    Johnson-type radius tau = (q^2-1)/q^2 (1 - sqrt(1 - q^2 delta/(q^2-1))).

    Raises:
        DomainError: If delta lies outside [0, (q^2-1)/q^2]
    """
    s = q * q
    cap = (s - 1) / s
    if delta < 0 or delta > cap + _EPS:
        raise DomainError(f"delta must lie in [0, {cap}], got {delta}")
    radicand = max(0.0, 1.0 - s * delta / (s - 1))
    return _clamp(cap * (1.0 - math.sqrt(radicand)), 0.0, cap)


def johnson_radius_asymptotic(delta: float) -> float:
    """Large-q limit of the Johnson-type radius, 1 - sqrt(1 - delta)."""
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must lie in [0, 1], got {delta}")
    return 1.0 - math.sqrt(1.0 - delta)


def johnson_list_size(q: int, n: int, d: int) -> int:
    """
    List size 2 (q^2 - 1) n d guaranteed within the Johnson-type radius.

    Raises:
        DomainError: Unless 1 <= d <= n
    """
    if not 1 <= d <= n:
        raise DomainError(f"Distance must satisfy 1 <= d <= n={n}, got {d}")
    return 2 * (q * q - 1) * n * d


@dataclass(frozen=True)
class BoundRow:
    delta: float
    gv_pair: float
    gv_hamming: float
    singleton: float
    johnson_tau: Optional[float]


@dataclass
class BoundReport:
    """Bounds on a delta-grid, one row per delta (pair GV, Hamming GV, Singleton, Johnson-type radius)."""

    q: int
    rows: List[BoundRow] = field(default_factory=list)

    @property
    def deltas(self) -> List[float]:
        return [row.delta for row in self.rows]

    @property
    def johnson_list_coefficient(self) -> int:
        """Coefficient c in the list size c * n * d."""
        return 2 * (self.q * self.q - 1)


def delta_grid(start: float, stop: float, step: float) -> List[float]:
    """
    Strictly increasing grid start, start+step, ..., <= stop (endpoints rounded to 12 digits).

    Raises:
        DomainError: For a non-positive step or an empty/out-of-range grid
    """
    if step <= 0:
        raise DomainError(f"Grid step must be positive, got {step}")
    if not 0.0 <= start <= stop <= 1.0:
        raise DomainError(f"Grid must satisfy 0 <= start <= stop <= 1, got [{start}, {stop}]")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def bound_report(q: int, deltas: Sequence[float]) -> BoundReport:
    """
    Evaluate every bound on a strictly increasing delta-grid.

    Raises:
        DomainError: If the grid is not strictly increasing or leaves [0, 1]
    """
    deltas = list(deltas)
    if any(b <= a for a, b in zip(deltas, deltas[1:])):
        raise DomainError("delta-grid must be strictly increasing")
    report = BoundReport(q=q)
    cap = (q * q - 1) / (q * q)
    for delta in deltas:
        report.rows.append(BoundRow(
            delta=delta,
            gv_pair=gv_rate_pair(q, delta),
            gv_hamming=gv_rate_hamming(q, delta),
            singleton=singleton_rate(delta),
            johnson_tau=johnson_radius(q, delta) if delta <= cap else None,
        ))
    logger.info(f"Bound report for q={q}: {len(report.rows)} rows")
    return report
