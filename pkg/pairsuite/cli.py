"""
Command-line front end.

    pairsuite [--format csv|json] [--out PATH] [--config PATH] [--timing] COMMAND ...

Commands: bounds, ball, decode, experiment, selftest, margin. Every command
writes one OutputRecord to stdout (or --out); logs go to stderr.

Exit codes: 0 success, 1 verification failure, 2 usage error (including an
unwritable --out path),
3 search space or size guard exceeded, 4 domain error.
"""

import argparse
import logging
import sys
import time
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .bounds import bound_report, delta_grid
from .config import get_config, reset_config
from .exceptions import DomainError, PairSuiteError, VerificationFailed
from .experiments import gv_list_experiment
from .list_decoder import beyond_johnson_margin, decode_radius, gap_holds, list_decode
from .pair_metric import as_ints, ball_size_enumerated, ball_size_exact, pair_distance
from .reporting import OutputRecord
from .rs_codes import CodeSpec, inject_pair_errors, poly_to_message, rs_encode
from .selftest import run_selftest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
RANDOM_SEED = "random"


def _parse_seed(text: str):
    """Non-negative integer seed, or ``random`` (drawn from OS entropy and then recorded)."""
    if text == RANDOM_SEED:
        return RANDOM_SEED
    try:
        seed = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be a non-negative integer or 'random', got {text!r}")
    if seed < 0:
        raise argparse.ArgumentTypeError(f"seed must be non-negative, got {seed}")
    return seed


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _parse_coeffs(text: str) -> List[int]:
    try:
        return [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"message must be comma-separated integers, got {text!r}")


def _resolve_seed(seed) -> int:
    if seed is None:
        return int(get_config().get("cli", "default_seed"))
    if seed == RANDOM_SEED:
        return int(np.random.SeedSequence().generate_state(1)[0])
    return seed


def cmd_bounds(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any], Optional[int]]:
    deltas = args.delta if args.delta else delta_grid(args.start, args.stop, args.step)
    report = bound_report(args.q, deltas)
    rows = [
        {
            "delta": row.delta,
            "gv_pair": row.gv_pair,
            "gv_hamming": row.gv_hamming,
            "singleton": row.singleton,
            "johnson_tau": row.johnson_tau,
        }
        for row in report.rows
    ]
    parameters = {"q": args.q, "deltas": list(deltas)}
    return parameters, {"rows": rows, "johnson_list_coefficient": report.johnson_list_coefficient}, None


def cmd_ball(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any], Optional[int]]:
    size = ball_size_exact(args.n, args.q, args.r)
    result: Dict[str, Any] = {"size": size, "verified": None}
    if args.verify:
        enumerated = ball_size_enumerated(args.n, args.q, args.r)
        result["enumerated"] = enumerated
        result["verified"] = enumerated == size
        if enumerated != size:
            raise VerificationFailed(f"Closed form {size} != enumeration {enumerated}")
    return {"n": args.n, "q": args.q, "r": args.r, "verify": args.verify}, result, None


def cmd_decode(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any], Optional[int]]:
    spec = CodeSpec.new(args.q, args.n, args.k)
    radius = args.radius if args.radius is not None else decode_radius(spec)
    if args.errors > radius:
        if not args.force:
            raise DomainError(f"{args.errors} pair errors exceed the decoding radius {radius}; pass --force")
        radius = args.errors

    seed = _resolve_seed(args.seed)
    rng = np.random.default_rng(seed)
    if args.message is not None:
        if any(not 0 <= c < spec.q for c in args.message):
            raise DomainError(f"Message coefficients must lie in [0, {spec.q}), got {args.message}")
        f = spec.field.poly(args.message)
    else:
        f = spec.field.poly(spec.field.random(spec.k, rng))
    x = rs_encode(spec, f)
    y = inject_pair_errors(x, args.errors, rng, mode=args.mode)
    decoded = list_decode(spec, y, radius)

    result = {
        "transmitted": list(poly_to_message(spec, f)),
        "codeword": as_ints(x).tolist(),
        "received": as_ints(y).tolist(),
        "injected_distance": pair_distance(x, y),
        "radius": decoded.radius,
        "candidates": [
            {"message": list(c.message), "distance": c.distance} for c in decoded.candidates
        ],
        "list_size": len(decoded),
        "contained": decoded.contains(spec, f),
        "diagnostics": decoded.diagnostics,
    }
    parameters = {
        "q": args.q, "n": args.n, "k": args.k, "errors": args.errors,
        "mode": args.mode, "force": args.force,
    }
    return parameters, result, seed


def cmd_experiment(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any], Optional[int]]:
    seed = _resolve_seed(args.seed)
    report = gv_list_experiment(
        args.q, args.n, args.tau, args.epsilon, args.trials, seed,
        mode=args.mode, threads=args.threads, centers=args.centers,
    )
    parameters = {
        "q": args.q, "n": args.n, "tau": args.tau, "epsilon": args.epsilon,
        "trials": args.trials, "mode": args.mode,
    }
    return parameters, report.to_dict(include_runtime=args.timing), seed


def cmd_selftest(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any], Optional[int]]:
    suites = run_selftest()
    result = {"passed": all(s.passed for s in suites), "suites": [s.to_dict() for s in suites]}
    return {}, result, None


def cmd_margin(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any], Optional[int]]:
    margin = beyond_johnson_margin(CodeSpec.new(args.q, args.n, args.k))
    result = {
        "delta": margin.delta,
        "decoder_tau": margin.decoder_tau,
        "johnson_tau": margin.johnson_tau,
        "margin": margin.margin,
        "gap_holds": gap_holds(margin.delta),
    }
    return {"q": args.q, "n": args.n, "k": args.k}, result, None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairsuite",
        description="Symbol-pair codes: bounds, ball sizes, list decoding of Reed-Solomon codes, random-code experiments.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("csv", "json"), default=None, help="output format (default: json)")
    parser.add_argument("--out", help="write the record to this file instead of stdout")
    parser.add_argument("--config", help="JSON configuration file")
    parser.add_argument("--timing", action="store_true", help="record elapsed time (output no longer byte-stable)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    bounds = subparsers.add_parser("bounds", help="GV, Singleton and Johnson-type bounds on a delta-grid")
    bounds.add_argument("--q", type=int, required=True)
    bounds.add_argument("--delta", type=float, nargs="+", help="explicit delta values")
    bounds.add_argument("--start", type=float, default=0.0)
    bounds.add_argument("--stop", type=float, default=1.0)
    bounds.add_argument("--step", type=float, default=0.01)
    bounds.set_defaults(handler=cmd_bounds)

    ball = subparsers.add_parser("ball", help="exact symbol-pair ball size")
    ball.add_argument("--n", type=int, required=True)
    ball.add_argument("--q", type=int, required=True)
    ball.add_argument("--r", type=int, required=True)
    ball.add_argument("--verify", action="store_true", help="cross-check by enumeration")
    ball.set_defaults(handler=cmd_ball)

    decode = subparsers.add_parser("decode", help="encode, corrupt and list decode one word")
    decode.add_argument("--q", type=int, required=True)
    decode.add_argument("--n", type=int, required=True)
    decode.add_argument("--k", type=int, required=True)
    decode.add_argument("--errors", type=int, default=0, help="pair-error budget t")
    decode.add_argument("--radius", type=int, help="decoding radius (default: guaranteed radius)")
    decode.add_argument("--seed", type=_parse_seed, help="integer or 'random' (default: 0)")
    source = decode.add_mutually_exclusive_group()
    source.add_argument("--message", type=_parse_coeffs, help="ascending coefficients, comma-separated")
    source.add_argument("--random", action="store_true", help="uniform random message (default)")
    decode.add_argument("--mode", choices=("spread", "burst"), default="spread")
    decode.add_argument("--force", action="store_true", help="allow budgets beyond the guaranteed radius")
    decode.set_defaults(handler=cmd_decode)

    experiment = subparsers.add_parser("experiment", help="random-code list-decodability audit")
    experiment.add_argument("--q", type=int, required=True)
    experiment.add_argument("--n", type=int, required=True)
    experiment.add_argument("--tau", type=float, required=True)
    experiment.add_argument("--epsilon", type=float, required=True)
    experiment.add_argument("--trials", type=int, required=True)
    experiment.add_argument("--seed", type=_parse_seed, help="integer or 'random' (default: 0)")
    experiment.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    experiment.add_argument("--centers", type=_positive_int, help="centres per code in sampled mode")
    experiment.add_argument("--threads", type=_positive_int, help="worker threads (default: PAIRSUITE_THREADS or CPU count)")
    experiment.set_defaults(handler=cmd_experiment)

    selftest = subparsers.add_parser("selftest", help="run the oracle suites")
    selftest.set_defaults(handler=cmd_selftest)

    margin = subparsers.add_parser("margin", help="decoder radius against the Johnson-type radius")
    margin.add_argument("--q", type=int, required=True)
    margin.add_argument("--n", type=int, required=True)
    margin.add_argument("--k", type=int, required=True)
    margin.set_defaults(handler=cmd_margin)

    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    if args.config:
        reset_config()
        get_config(args.config)
    config = get_config()
    logging.getLogger("pairsuite").setLevel(config.get("logging", "level"))
    fmt = args.format or config.get("cli", "format")

    started = time.perf_counter()
    try:
        parameters, result, seed = args.handler(args)
    except VerificationFailed as e:
        logger.error(str(e))
        return e.exit_code
    except PairSuiteError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code

    record = OutputRecord(
        command=args.command,
        parameters=parameters,
        result=result,
        seed=seed,
        elapsed_seconds=time.perf_counter() - started if args.timing else None,
        float_digits=config.get("cli", "float_digits"),
    )
    try:
        _emit(record.render(fmt), args.out)
    except OSError as e:
        logger.error(f"Cannot write output: {e}")
        return EXIT_USAGE

    if args.command == "selftest" and not result["passed"]:
        return VerificationFailed.exit_code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
