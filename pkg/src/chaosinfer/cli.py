"""Command-line driver for the decision-point sweep.

Exit codes: 0 on success, 1 on configuration errors, 2 on runtime errors.
"""

from __future__ import annotations

import argparse
import sys

from .sweep import (
    FORMAT_CHOICES,
    ORDER_PRIOR_CHOICES,
    ConfigError,
    SweepConfig,
    emit,
    emit_detail,
    run_sweep,
)

# flag name (config-file key) -> SweepConfig field
_FLAG_TO_FIELD = {
    "family": "family",
    "r": "r",
    "sigma": "sigma",
    "n": "n",
    "transient": "transient",
    "seed": "seed",
    "grid": "grid",
    "k-min": "k_min",
    "k-max": "k_max",
    "order-prior": "order_prior",
    "alpha": "alpha",
    "regenerate-per-d": "regenerate_per_d",
    "format": "out_format",
    "out": "out_path",
    "detail": "detail_path",
}


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


_FIELD_PARSERS = {
    "family": str,
    "r": float,
    "sigma": float,
    "n": int,
    "transient": int,
    "seed": int,
    "grid": int,
    "k_min": int,
    "k_max": int,
    "order_prior": str,
    "alpha": float,
    "regenerate_per_d": _parse_bool,
    "out_format": str,
    "out_path": str,
    "detail_path": str,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="chaosinfer",
        description=(
            "Sweep binary decision points over a noisy chaotic map, select a Markov "
            "order per point, and estimate entropy rates."
        ),
    )
    parser.add_argument("--config", metavar="FILE",
                        help="flat key=value file; command-line flags override it")
    parser.add_argument("--family", choices=["logistic"], help="map family (default logistic)")
    parser.add_argument("--r", type=float, help="map control parameter (default 4.0)")
    parser.add_argument("--sigma", type=float, help="noise standard deviation (default 1e-3)")
    parser.add_argument("--n", type=int, help="number of recorded states (default 10000)")
    parser.add_argument("--transient", type=int, help="discarded warm-up steps (default 1000)")
    parser.add_argument("--seed", type=int, help="random seed (default 0)")
    parser.add_argument("--grid", type=int,
                        help="number of decision points spanning [0, 1] (default 200)")
    parser.add_argument("--k-min", type=int, help="smallest Markov order (default 1)")
    parser.add_argument("--k-max", type=int, help="largest Markov order (default 8)")
    parser.add_argument("--order-prior", choices=list(ORDER_PRIOR_CHOICES),
                        help="prior over orders (default size-penalty)")
    parser.add_argument("--alpha", type=float,
                        help="symmetric Dirichlet pseudo-count (default 1.0)")
    parser.add_argument("--regenerate-per-d", action="store_true", default=None,
                        help="fresh trajectory per decision point instead of one shared series")
    parser.add_argument("--format", choices=list(FORMAT_CHOICES),
                        help="summary output format (default csv)")
    parser.add_argument("--out", help="summary output path (default sweep.csv)")
    parser.add_argument("--detail", help="optional per-(d, k) estimates CSV path")
    return parser


def _read_config_file(path: str) -> dict[str, object]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc
    values: dict[str, object] = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
        key, _, text = line.partition("=")
        key = key.strip().lower().replace("-", "_")
        field = None
        for flag, name in _FLAG_TO_FIELD.items():
            if key in (flag.replace("-", "_"), name):
                field = name
                break
        if field is None:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            values[field] = _FIELD_PARSERS[field](text.strip())
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return values


def parse_config(argv: list[str] | None = None) -> SweepConfig:
    """Build a validated SweepConfig from flags and an optional config file.

    Precedence: command-line flags override config-file values, which
    override the built-in defaults.
    """
    ns = build_parser().parse_args(argv)
    values: dict[str, object] = {}
    if ns.config is not None:
        values.update(_read_config_file(ns.config))
    for flag, field in _FLAG_TO_FIELD.items():
        arg = getattr(ns, flag.replace("-", "_"))
        if arg is not None:
            values[field] = arg
    config = SweepConfig(**values)
    config.validate()
    return config


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_config(argv)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    try:
        result = run_sweep(config)
        emit(result, config.out_format, config.out_path)
        if config.detail_path is not None:
            emit_detail(result, config.detail_path)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    good = [row for row in result.rows if row.error is None]
    print(f"wrote {len(result.rows)} rows to {config.out_path}")
    if config.detail_path is not None:
        print(f"wrote {len(result.detail)} detail rows to {config.detail_path}")
    print(f"lyapunov estimate: {result.lyapunov_bits:.4f} bits/step")
    if good:
        best = max(good, key=lambda row: row.h_expected_bits)
        print(
            f"max expected information rate: {best.h_expected_bits:.4f} bits/symbol "
            f"at d={best.d:.6f} (k={best.k_selected})"
        )
    failed = len(result.rows) - len(good)
    if failed:
        print(f"{failed} rows failed; see the error column", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
