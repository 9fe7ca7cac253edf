"""
Oracle suites run by ``pairsuite selftest``.

Each suite compares a closed form or an algorithm with brute force at pinned
small parameters and a pinned seed, so repeated runs give identical reports.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from .experiments import RandomCode, double_counting_sides
from .fields import field_for_order
from .list_decoder import exhaustive_decode, list_decode
from .pair_metric import as_ints, ball_size_exact, iter_space, pair_distances, pair_weights
from .rs_codes import CodeSpec, inject_pair_errors, rs_encode

logger = logging.getLogger(__name__)

SELFTEST_SEED = 20240601

BallSizeFn = Callable[[int, int, int], int]


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, description: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(description)

    def to_dict(self) -> Dict[str, object]:
        return {"name": self.name, "checks": self.checks, "passed": self.passed, "failures": self.failures}


def weight_histogram(q: int, n: int) -> np.ndarray:
    """Number of words of F_q^n at each pair weight 0..n."""
    counts = np.zeros(n + 1, dtype=np.int64)
    for block in iter_space(q, n):
        counts += np.bincount(pair_weights(block), minlength=n + 1)
    return counts


def ball_suite(ball_size: BallSizeFn = ball_size_exact) -> SuiteResult:
    suite = SuiteResult("ball_equality")
    for q, lengths in ((2, range(2, 9)), (3, range(2, 6)), (4, range(2, 5))):
        for n in lengths:
            cumulative = np.cumsum(weight_histogram(q, n))
            for r in range(n + 1):
                expected = int(cumulative[r])
                got = ball_size(n, q, r)
                suite.check(got == expected, f"q={q} n={n} r={r}: {got} != {expected}")
    return suite


def metric_suite(samples: int = 2000, seed: int = SELFTEST_SEED) -> SuiteResult:
    suite = SuiteResult("metric_axioms")
    rng = np.random.default_rng(seed)
    for q, n in ((2, 8), (5, 6), (16, 5)):
        GF = field_for_order(q).GF
        x, y, z = (GF.Random((samples, n), seed=rng) for _ in range(3))
        xi, yi, zi = as_ints(x), as_ints(y), as_ints(z)
        dxy = pair_distances(xi, yi)
        dh = np.count_nonzero(xi != yi, axis=1)
        tag = f"q={q} n={n}"

        suite.check(np.array_equal(dxy, pair_distances(yi, xi)), f"{tag}: symmetry")
        suite.check(bool(np.all(dxy <= pair_distances(xi, zi) + pair_distances(zi, yi))), f"{tag}: triangle")
        suite.check(np.array_equal(dxy, pair_distances(as_ints(x + z), as_ints(y + z))), f"{tag}: translation")
        suite.check(np.array_equal(dxy, pair_distances(np.roll(xi, 1, axis=1), np.roll(yi, 1, axis=1))),
                    f"{tag}: cyclic shift")

        proper = (dh > 0) & (dh < n)
        suite.check(bool(np.all(dh[proper] + 1 <= dxy[proper])), f"{tag}: d_H + 1 <= d_P")
        suite.check(bool(np.all(dxy[proper] <= 2 * dh[proper])), f"{tag}: d_P <= 2 d_H")
        suite.check(np.array_equal(dxy[~proper], dh[~proper]), f"{tag}: d_P = d_H at d_H in {{0, n}}")
    return suite


def decoder_suite(words: int = 20, seed: int = SELFTEST_SEED) -> SuiteResult:
    suite = SuiteResult("decoder_vs_exhaustive")
    spec = CodeSpec.new(8, 7, 2)
    rng = np.random.default_rng(seed)
    for trial in range(words):
        f = spec.field.poly(spec.field.random(spec.k, rng))
        y = inject_pair_errors(rs_encode(spec, f), 2, rng)
        result = list_decode(spec, y, radius=2)
        suite.check(result.messages == exhaustive_decode(spec, y, 2), f"{spec} word {trial}: list differs")
    return suite


def double_counting_suite(codes: int = 10, seed: int = SELFTEST_SEED) -> SuiteResult:
    suite = SuiteResult("double_counting")
    rng = np.random.default_rng(seed)
    for index in range(codes):
        q = int(rng.choice([2, 3]))
        n = int(rng.integers(2, 7))
        size = int(rng.integers(1, 9))
        code = RandomCode(q=q, n=n, rate=0.0, seed=index, words=rng.integers(0, q, size=(size, n)))
        for radius in sorted({0, 1, 2, min(3, n), n}):
            left, right = double_counting_sides(code, radius)
            suite.check(left == right, f"q={q} n={n} |C|={size} r={radius}: {left} != {right}")
    return suite


def run_selftest(ball_size: Optional[BallSizeFn] = None) -> List[SuiteResult]:
    """
    Run every oracle suite.

    Args:
        ball_size: Ball-size function under test; defaults to ``ball_size_exact``
    """
    suites = [
        ball_suite(ball_size or ball_size_exact),
        metric_suite(),
        decoder_suite(),
        double_counting_suite(),
    ]
    for suite in suites:
        level = logging.INFO if suite.passed else logging.ERROR
        logger.log(level, f"Selftest {suite.name}: {suite.checks} checks, {len(suite.failures)} failures")
    return suites
