# utils/config.py
"""
Run configuration. Precedence: command-line flag, then BQHO_* environment
variable (a local .env is honoured), then the built-in default.
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from bqho.core import Tolerance
from bqho.errors import InvalidParams
from bqho.oscillator import OscillatorParams

load_dotenv()

FORMATS = ("json", "csv")

DEFAULTS = {
    "m": 1.0,
    "omega": 1.0,
    "hbar": 1.0,
    "xi1": 1.0,
    "xi2": 1.0,
    "trunc": 32,
    "abs_eps": 0.0,
    "rel_eps": 1e-12,
    "seed": 20240101,
    "format": "json",
}


@dataclass(frozen=True)
class RunConfig:
    params: OscillatorParams
    trunc: int
    tol: Tolerance
    fmt: str = "json"
    out: Optional[str] = None  # None means stdout
    seed: int = DEFAULTS["seed"]


def _env(name: str, cast):
    raw = os.getenv(f"BQHO_{name.upper()}")
    if raw is None or raw.strip() == "":
        return DEFAULTS[name]
    try:
        return cast(raw)
    except ValueError:
        raise InvalidParams(f"BQHO_{name.upper()}={raw!r} is not a valid {cast.__name__}")


def _pick(args, name: str, cast):
    value = getattr(args, name, None)
    return _env(name, cast) if value is None else cast(value)


def run_config_from_args(args) -> RunConfig:
    """Build a RunConfig from parsed argparse flags; every flag may be left as None."""
    trunc = _pick(args, "trunc", int)
    if trunc < 1:
        raise InvalidParams(f"--trunc must be >= 1, got {trunc}")

    fmt = _pick(args, "format", str).lower()
    if fmt not in FORMATS:
        raise InvalidParams(f"--format must be one of {FORMATS}, got {fmt!r}")

    # --tol sets the relative slack; the absolute slack only comes from the environment
    tol_flag = getattr(args, "tol", None)
    rel_eps = _env("rel_eps", float) if tol_flag is None else float(tol_flag)
    tol = Tolerance(abs_eps=_env("abs_eps", float), rel_eps=rel_eps)

    params = OscillatorParams.from_components(
        m=_pick(args, "m", float),
        omega=_pick(args, "omega", float),
        hbar=_pick(args, "hbar", float),
        xi1=_pick(args, "xi1", float),
        xi2=_pick(args, "xi2", float),
    )
    return RunConfig(
        params=params,
        trunc=trunc,
        tol=tol,
        fmt=fmt,
        out=getattr(args, "out", None),
        seed=_pick(args, "seed", int),
    )
