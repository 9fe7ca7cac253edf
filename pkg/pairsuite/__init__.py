"""
Pairsuite Package

Symbol-pair coding theory: the pair metric and exact ball sizes, GV /
Singleton / Johnson-type bounds, Reed-Solomon codes with their 2-folded view,
a list decoder for the symbol-pair channel, and random-code experiments.

Main Modules:
    fields: F_q and the extension F_q[X]/(X^{q-1} - gamma)
    pair_metric: Pair reads, pair distance, ball sizes
    bounds: kappa_sp, GV rates, Singleton, Johnson-type radius
    rs_codes: RS[n, k] encoding, folding, pair-error channel
    list_decoder: Interpolation and linearized root finding
    experiments: Random-code list-decodability audits
    cli: The ``pairsuite`` command

Example Usage:
    from pairsuite import CodeSpec, list_decode, rs_encode, inject_pair_errors
    spec = CodeSpec.new(16, 15, 4)
    f = spec.field.poly([1, 2, 3, 4])
    y = inject_pair_errors(rs_encode(spec, f), 6, rng)
    result = list_decode(spec, y)
    assert result.contains(spec, f)
"""

__version__ = "1.0.0"
__author__ = "Pairsuite Team"
__email__ = "contact@example.com"

import logging

from .config import Config, get_config, reset_config
from .exceptions import (
    DegreeTooLarge,
    DivisionByZero,
    DomainError,
    FieldMismatch,
    LengthMismatch,
    LengthTooShort,
    NonPrimeCharacteristic,
    NoSolution,
    OrderTooLarge,
    PairSuiteError,
    ParameterError,
    RadiusNonpositive,
    ReducibleModulus,
    SearchSpaceTooLarge,
    SizeTooLarge,
    VerificationFailed,
)
from .fields import BigField, Field, big_field_new, field_for_order, field_new
from .pair_metric import (
    ball_size_exact,
    ball_size_log,
    pair_distance,
    pair_read,
    pair_weight,
    run_profile,
    runs_count,
)
from .bounds import (
    bound_report,
    entropy_q,
    gv_rate_hamming,
    gv_rate_pair,
    johnson_list_size,
    johnson_radius,
    kappa_sp,
    list_radius_upper,
    singleton_rate,
)
from .rs_codes import CodeSpec, fold2, inject_pair_errors, min_pair_distance_exhaustive, rs_encode
from .list_decoder import beyond_johnson_margin, decode_radius, interpolate, list_decode, solve_linearized
from .experiments import double_counting_check, gv_list_experiment, max_list_size, sample_random_code

__all__ = [
    # Fields
    'Field',
    'BigField',
    'field_new',
    'field_for_order',
    'big_field_new',

    # Pair metric
    'pair_read',
    'pair_distance',
    'pair_weight',
    'run_profile',
    'runs_count',
    'ball_size_exact',
    'ball_size_log',

    # Bounds
    'entropy_q',
    'kappa_sp',
    'gv_rate_pair',
    'gv_rate_hamming',
    'singleton_rate',
    'list_radius_upper',
    'johnson_radius',
    'johnson_list_size',
    'bound_report',

    # Codes and decoding
    'CodeSpec',
    'rs_encode',
    'fold2',
    'min_pair_distance_exhaustive',
    'inject_pair_errors',
    'decode_radius',
    'interpolate',
    'solve_linearized',
    'list_decode',
    'beyond_johnson_margin',

    # Experiments
    'sample_random_code',
    'max_list_size',
    'double_counting_check',
    'gv_list_experiment',

    # Configuration
    'Config',
    'get_config',
    'reset_config',

    # Errors
    'PairSuiteError',
    'DomainError',
    'ParameterError',
    'NonPrimeCharacteristic',
    'OrderTooLarge',
    'FieldMismatch',
    'DivisionByZero',
    'ReducibleModulus',
    'LengthTooShort',
    'LengthMismatch',
    'DegreeTooLarge',
    'RadiusNonpositive',
    'NoSolution',
    'SearchSpaceTooLarge',
    'SizeTooLarge',
    'VerificationFailed',
]

# Create package logger; handlers write to stderr so stdout stays reserved for records
logger = logging.getLogger(__name__)
logger.setLevel(get_config().get("logging", "level"))

if not logger.handlers:
    console_handler = logging.StreamHandler()

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    console_handler.setFormatter(formatter)

    logger.addHandler(console_handler)
