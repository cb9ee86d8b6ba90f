# bqho_cli.py
"""
Command-line front end.

    python bqho_cli.py spectrum --xi1 1 --xi2 2 --max-l 3 --max-lprime 3
    python bqho_cli.py wavefunction --l 1 --lprime 2 --xmin -4 --xmax 4 --samples 81 --format csv
    python bqho_cli.py hermite --l 3 --theta1 0.5 --theta2 1.5
    python bqho_cli.py verify --suite all

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or configuration.
"""

import argparse
import logging
import sys

import numpy as np

from bqho import oscillator, verify, wavefn
from bqho.core import Hyperbolic, hyperbolic_to_json
from bqho.errors import BicomplexError, InvalidParams
from utils.config import FORMATS, RunConfig, run_config_from_args
from utils.emit import emit
from utils.logs import setup_logging

logger = logging.getLogger("bqho.cli")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


# ==================== COMMANDS ====================
def cmd_spectrum(cfg: RunConfig, args) -> int:
    max_l = min(4, cfg.trunc) if args.max_l is None else args.max_l
    max_lprime = min(4, cfg.trunc) if args.max_lprime is None else args.max_lprime
    entries = oscillator.spectrum(cfg.trunc, cfg.params, max_l, max_lprime)
    # CSV flattens the energy into E1, E2; JSON keeps the nested record
    records = oscillator.spectrum_table(entries) if cfg.fmt == "csv" else [e.to_record() for e in entries]
    emit("spectrum", records, cfg.fmt, cfg.out)
    return EXIT_OK


def cmd_wavefunction(cfg: RunConfig, args) -> int:
    if args.samples < 2:
        raise InvalidParams(f"--samples must be >= 2, got {args.samples}")
    if not args.xmin < args.xmax:
        raise InvalidParams(f"need xmin < xmax, got [{args.xmin}, {args.xmax}]")
    u = wavefn.phi_mixed(args.l, args.lprime, args.w1, args.w2, cfg.params)
    xs = np.linspace(args.xmin, args.xmax, args.samples)
    emit("wavefunction", wavefn.sample_table(u, xs, unit_j=args.unit_j), cfg.fmt, cfg.out)
    return EXIT_OK


def cmd_hermite(cfg: RunConfig, args) -> int:
    poly = wavefn.hermite_coeffs(args.l)
    value = wavefn.hermite_hyperbolic_eval(args.l, Hyperbolic(args.theta1, args.theta2))
    record = {"l": poly.l, "coeffs": list(poly.coeffs), "value": hyperbolic_to_json(value)}
    emit("hermite", [record], cfg.fmt, cfg.out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig, args) -> int:
    ctx = verify.VerifyContext(params=cfg.params, n=cfg.trunc, tol=cfg.tol, seed=cfg.seed)
    results = verify.run_suites(verify.suite_names(args.suite), ctx)
    emit("verify", [r.to_record() for r in results], cfg.fmt, cfg.out)
    failed = [r for r in results if not r.passed]
    if failed:
        logger.error("%d of %d checks failed", len(failed), len(results))
        return EXIT_FAILED
    logger.info("all %d checks passed", len(results))
    return EXIT_OK


COMMANDS = {
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "hermite": cmd_hermite,
    "verify": cmd_verify,
}


# ==================== PARSER ====================
def _shared_flags() -> argparse.ArgumentParser:
    # None means "fall back to BQHO_* or the default" in run_config_from_args
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--m", type=float, default=None, help="mass (default 1)")
    shared.add_argument("--omega", type=float, default=None, help="angular frequency (default 1)")
    shared.add_argument("--hbar", type=float, default=None, help="reduced Planck constant (default 1)")
    shared.add_argument("--xi1", type=float, default=None, help="first idempotent component of xi (> 0)")
    shared.add_argument("--xi2", type=float, default=None, help="second idempotent component of xi (> 0)")
    shared.add_argument("--trunc", type=int, default=None, metavar="N", help="truncation level (default 32)")
    shared.add_argument("--tol", type=float, default=None, metavar="EPS", help="relative tolerance (default 1e-12)")
    shared.add_argument("--format", choices=FORMATS, default=None, help="output format (default json)")
    shared.add_argument("--out", default=None, metavar="PATH", help="output file (default stdout)")
    shared.add_argument("--seed", type=int, default=None, help="seed for the random verification sweeps")
    shared.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    return shared


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_flags()
    parser = argparse.ArgumentParser(prog="bqho", description="Bicomplex quantum harmonic oscillator toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[shared], help="eigenvalues for all (l, l') pairs")
    p.add_argument("--max-l", dest="max_l", type=int, default=None)
    p.add_argument("--max-lprime", dest="max_lprime", type=int, default=None)

    p = sub.add_parser("wavefunction", parents=[shared], help="sample e1 w1 phi_l + e2 w2 phi_l'")
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--lprime", type=int, default=0)
    p.add_argument("--w1", type=complex, default=1 + 0j, help="complex coefficient, e.g. 1+2j")
    p.add_argument("--w2", type=complex, default=1 + 0j)
    p.add_argument("--xmin", type=float, default=-5.0)
    p.add_argument("--xmax", type=float, default=5.0)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--unit-j", dest="unit_j", action="store_true", help="add the a + j b columns")

    p = sub.add_parser("hermite", parents=[shared], help="hyperbolic Hermite polynomial H_l(theta)")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--theta1", type=float, default=0.0)
    p.add_argument("--theta2", type=float, default=0.0)

    p = sub.add_parser("verify", parents=[shared], help="run the invariant suites")
    p.add_argument("--suite", choices=sorted(verify.SUITES) + ["all"], default="all")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        cfg = run_config_from_args(args)
        return COMMANDS[args.command](cfg, args)
    except (BicomplexError, ValueError) as e:
        logger.error("%s: %s", args.command, e)
        return EXIT_USAGE
    except OSError as e:
        logger.error("%s: cannot write output: %s", args.command, e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
