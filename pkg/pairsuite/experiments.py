"""
Random-code experiments for the pair metric.

Random codes are sampled with replacement at a target rate and audited for
list-decodability by exhaustive (or sampled) search over ball centres. The
double-counting identity sum_y |B_P(y, r) & C| = |C| |B_P(r)| is checked exactly.
"""

import logging
import math
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from .bounds import kappa_sp
from .config import get_config
from .exceptions import DomainError, SearchSpaceTooLarge, SizeTooLarge
from .pair_metric import ball_size_exact, iter_space, pair_distances

logger = logging.getLogger(__name__)

SEED_SCHEME = (
    "trial_seed[i] = numpy.random.SeedSequence(seed).spawn(trials)[i].generate_state(1)[0]; "
    "code, centres = numpy.random.SeedSequence(trial_seed[i]).spawn(2), each .generate_state(1)[0]"
)
MODES = ("exhaustive", "sampled")


def code_size(q: int, n: int, rate: float) -> int:
    """M = ceil(q^{Rn}), with q^{Rn} rounded to 9 decimals so exact powers stay exact."""
    return int(math.ceil(round(q ** (rate * n), 9)))


@dataclass
class RandomCode:
    """
    M words of F_q^n drawn uniformly with replacement (a multiset).

    ``words`` holds integer representations, shape (M, n).
    """

    q: int
    n: int
    rate: float
    seed: int
    words: np.ndarray

    @property
    def size(self) -> int:
        return int(self.words.shape[0])


def _checked_code_size(q: int, n: int, rate: float) -> int:
    if q < 2 or n < 2:
        raise DomainError(f"Random codes need q >= 2 and n >= 2, got q={q}, n={n}")
    if not 0.0 <= rate <= 1.0:
        raise DomainError(f"Rate must lie in [0, 1], got {rate}")
    guard_log2 = get_config().get("guards", "random_code_log2")
    if rate * n * math.log2(q) > guard_log2 + 1e-9:
        raise SizeTooLarge(f"q^(Rn) = {q}^{rate * n:.6g} exceeds 2^{guard_log2}")
    return code_size(q, n, rate)


def sample_random_code(q: int, n: int, rate: float, seed: int) -> RandomCode:
    """
    Sample M = ceil(q^{Rn}) uniform words, reproducibly from ``seed``.

    Raises:
        DomainError: For q < 2, n < 2 or a rate outside [0, 1]
        SizeTooLarge: If q^{Rn} exceeds the random-code guard
    """
    M = _checked_code_size(q, n, rate)
    rng = np.random.default_rng(seed)
    words = rng.integers(0, q, size=(M, n), dtype=np.int64)
    return RandomCode(q=q, n=n, rate=rate, seed=seed, words=words)


def _check_centers(q: int, n: int) -> None:
    limit = get_config().guard("exhaustive_centers")
    if q ** n > limit:
        raise SearchSpaceTooLarge(f"q^n = {q}^{n} exceeds the exhaustive-centre guard {limit}")


def _check_center_count(centers: Optional[int]) -> None:
    if centers is not None and centers < 1:
        raise DomainError(f"Sampled mode needs at least one centre, got {centers}")


def _ball_counts(code: RandomCode, radius: int, centers: Iterator[np.ndarray]) -> Iterator[np.ndarray]:
    """|B_P(y, radius) & C| with multiplicity, for each centre row, block by block."""
    budget = get_config().get("experiments", "chunk_elements")
    rows = max(1, budget // max(1, code.size * code.n))
    for block in centers:
        for start in range(0, block.shape[0], rows):
            part = block[start:start + rows]
            distances = pair_distances(part[:, np.newaxis, :], code.words[np.newaxis, :, :])
            yield np.count_nonzero(distances <= radius, axis=1)


def max_list_size(code: RandomCode, radius: int, mode: str = "exhaustive",
                  centers: Optional[int] = None, seed: int = 0) -> int:
    """
    max_y |B_P(y, radius) & C|, counting repeated codewords with multiplicity.

    Exhaustive mode visits every centre of F_q^n and is exact. Sampled mode
    visits ``centers`` uniform centres and returns a lower bound.

    Raises:
        SearchSpaceTooLarge: If exhaustive mode is asked for q^n above the guard
        DomainError: For an unknown mode, a negative radius or fewer than one centre
    """
    if radius < 0:
        raise DomainError(f"Radius must be >= 0, got {radius}")
    if mode == "exhaustive":
        _check_centers(code.q, code.n)
        source = iter_space(code.q, code.n)
    elif mode == "sampled":
        count = get_config().get("experiments", "sampled_centers") if centers is None else centers
        _check_center_count(count)
        rng = np.random.default_rng(seed)
        source = iter([rng.integers(0, code.q, size=(count, code.n), dtype=np.int64)])
    else:
        raise DomainError(f"Unknown mode {mode!r}; expected one of {MODES}")

    best = 0
    for counts in _ball_counts(code, radius, source):
        if counts.size:
            best = max(best, int(counts.max()))
    return best


def double_counting_sides(code: RandomCode, radius: int) -> Tuple[int, int]:
    """
    Both counts of A = {(c, y) : c in C, d_P(c, y) <= radius}.

    Returns:
        (sum over y of |B_P(y, radius) & C|, |C| * |B_P(radius)|)
    """
    _check_centers(code.q, code.n)
    left = sum(int(counts.sum()) for counts in _ball_counts(code, radius, iter_space(code.q, code.n)))
    right = code.size * ball_size_exact(code.n, code.q, radius)
    return left, right


def double_counting_check(code: RandomCode, radius: int) -> bool:
    """
    Exact check of the double-counting identity behind the list-decoding upper bound.

    Raises:
        SearchSpaceTooLarge: If q^n exceeds the exhaustive-centre guard
    """
    left, right = double_counting_sides(code, radius)
    if left != right:
        logger.warning(f"Double counting mismatch at radius {radius}: {left} != {right}")
    return left == right


def is_list_decodable(code: RandomCode, radius: int, L: int) -> bool:
    """(radius, L)_P-list decodable: every pair ball of that radius holds at most L codewords."""
    return max_list_size(code, radius, mode="exhaustive") <= L


def list_size_threshold(epsilon: float) -> int:
    """L = ceil(4/epsilon) - 1."""
    if epsilon <= 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    return int(math.ceil(round(4 / epsilon, 9))) - 1


def trial_seeds(seed: int, trials: int) -> List[int]:
    """Per-trial seeds split from the master seed; trial i gets the same seed however many trials run."""
    children = np.random.SeedSequence(seed).spawn(trials)
    return [int(child.generate_state(1)[0]) for child in children]


@dataclass
class ExperimentReport:
    q: int
    n: int
    tau: float
    epsilon: float
    trials: int
    seed: int
    rate: float
    code_size: int
    radius: int
    list_threshold: int
    mode: str
    exact: bool
    seed_scheme: str = SEED_SCHEME
    trial_seeds: List[int] = field(default_factory=list)
    max_list_sizes: List[int] = field(default_factory=list)
    runtime_seconds: Optional[float] = None

    @property
    def histogram(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.max_list_sizes).items()))

    @property
    def fraction_within_threshold(self) -> Optional[float]:
        """Fraction of trials with max list size <= L; None when no trial ran."""
        if not self.max_list_sizes:
            return None
        return sum(size <= self.list_threshold for size in self.max_list_sizes) / len(self.max_list_sizes)

    def to_dict(self, include_runtime: bool = False) -> Dict[str, Any]:
        data = asdict(self)
        data["histogram"] = {str(size): count for size, count in self.histogram.items()}
        data["fraction_within_threshold"] = self.fraction_within_threshold
        if not include_runtime:
            data.pop("runtime_seconds")
        return data


def split_trial_seed(trial_seed: int) -> Tuple[int, int]:
    """Independent (code, centre) seeds derived from one trial seed."""
    code_ss, centre_ss = np.random.SeedSequence(trial_seed).spawn(2)
    return int(code_ss.generate_state(1)[0]), int(centre_ss.generate_state(1)[0])


def _run_trial(q: int, n: int, rate: float, radius: int, mode: str,
               centers: Optional[int], trial_seed: int) -> int:
    code_seed, centre_seed = split_trial_seed(trial_seed)
    code = sample_random_code(q, n, rate, code_seed)
    return max_list_size(code, radius, mode=mode, centers=centers, seed=centre_seed)


def gv_list_experiment(q: int, n: int, tau: float, epsilon: float, trials: int, seed: int,
                       mode: str = "exhaustive", threads: Optional[int] = None,
                       centers: Optional[int] = None) -> ExperimentReport:
    """
    Sample ``trials`` random codes at rate max(0, 1 - kappa_sp(tau) - epsilon)
    and record each code's maximum list size at radius floor(tau n).

    Reports the distribution and the fraction of codes meeting L = ceil(4/eps) - 1;
    it asserts nothing about the asymptotic probability.

    Args:
        q, n: Alphabet size and length
        tau: Relative pair radius in [0, 1]
        epsilon: Rate slack (> 0)
        trials: Number of sampled codes (>= 0)
        seed: Master seed
        mode: "exhaustive" or "sampled"
        threads: Worker count (>= 1); defaults to the configured value
        centers: Centres per code in sampled mode (>= 1)

    Raises:
        DomainError: For invalid parameters
        SizeTooLarge, SearchSpaceTooLarge: When a guard is exceeded
    """
    if not 0.0 <= tau <= 1.0:
        raise DomainError(f"tau must lie in [0, 1], got {tau}")
    if trials < 0:
        raise DomainError(f"trials must be >= 0, got {trials}")
    if mode not in MODES:
        raise DomainError(f"Unknown mode {mode!r}; expected one of {MODES}")

    L = list_size_threshold(epsilon)
    rate = max(0.0, 1.0 - kappa_sp(q, tau).value - epsilon)
    radius = int(math.floor(tau * n + 1e-9))
    seeds = trial_seeds(seed, trials)

    # fail on guards before any worker starts
    M = _checked_code_size(q, n, rate)
    if mode == "exhaustive":
        _check_centers(q, n)
    else:
        _check_center_count(centers)
    if threads is not None and threads < 1:
        raise DomainError(f"threads must be >= 1, got {threads}")

    report = ExperimentReport(
        q=q, n=n, tau=tau, epsilon=epsilon, trials=trials, seed=seed, rate=rate,
        code_size=M, radius=radius, list_threshold=L, mode=mode,
        exact=(mode == "exhaustive"), trial_seeds=seeds,
    )

    workers = threads if threads is not None else get_config().threads()
    started = time.perf_counter()
    if seeds:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            report.max_list_sizes = list(pool.map(
                lambda s: _run_trial(q, n, rate, radius, mode, centers, s), seeds))
    report.runtime_seconds = time.perf_counter() - started

    logger.info(f"GV list experiment q={q} n={n} tau={tau} eps={epsilon}: M={report.code_size}, "
                f"radius={radius}, L={L}, fraction={report.fraction_within_threshold}")
    return report
