"""Command line entry point ``fracnabla``.

Problem files are line-oriented ``key = value`` text with ``#`` comments::

    kind    = caputo          # rl | caputo | two_rl | two_caputo
    alpha   = 0.5
    a       = 0.5
    f       = 2^-(t+1) - hmono(-0.5, t+1)
    u0      = 1
    horizon = 100

Two-term kinds additionally take ``beta``, ``b`` and ``u1``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from fracnabla.errors import DomainError, SingularSystemError, ValidationError
from fracnabla.expr import ExpressionError, evaluate, parse_expression
from fracnabla.grid import GridFunction
from fracnabla.output import emit_csv, emit_svg, format_real
from fracnabla.solver import ProblemSpec, solve
from fracnabla.specfun import monomial_weight_sequence
from fracnabla.verify import DEFAULT_TOL, residual

__all__ = ["ConfigError", "load_problem", "main", "run"]

CONFIG_DIR = Path(__file__).parent / "configs"

_KIND_NAMES = {
    "rl": "single_rl",
    "caputo": "single_caputo",
    "two_rl": "two_rl",
    "two_caputo": "two_caputo",
}
_SINGLE_KEYS = {"kind", "alpha", "a", "f", "u0", "horizon"}
_TWO_TERM_KEYS = _SINGLE_KEYS | {"beta", "b", "u1"}


class ConfigError(ValidationError):
    """Invalid problem file; :attr:`key` names the offending entry."""

    def __init__(self, message: str, key: str | None = None) -> None:
        super().__init__(f"{key}: {message}" if key else message)
        self.key = key


def _parse_lines(text: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        if key in entries:
            raise ConfigError(f"line {lineno}: duplicate key", key)
        if key not in _TWO_TERM_KEYS:
            raise ConfigError(f"line {lineno}: unknown key", key)
        if not value:
            raise ConfigError(f"line {lineno}: empty value", key)
        entries[key] = value
    return entries


def _number(entries: dict[str, str], key: str) -> float:
    try:
        return float(entries[key])
    except ValueError:
        raise ConfigError(f"not a number: {entries[key]!r}", key) from None


def _tabulate(entries: dict[str, str], key: str, first: int, horizon: int) -> GridFunction:
    try:
        node = parse_expression(entries[key])
    except ExpressionError as exc:
        raise ConfigError(str(exc), key) from exc
    # points before the first equation are never read; keep them at zero
    values = np.zeros(horizon + 1)
    for t in range(first, horizon + 1):
        try:
            values[t] = evaluate(node, t)
        except ExpressionError as exc:
            raise ConfigError(f"evaluation failed at t={t}: {exc}", key) from exc
    return GridFunction(values)


def load_problem(config_text: str, name: str = "") -> ProblemSpec:
    """Parse a problem file into a :class:`ProblemSpec`.

    :raises ConfigError: on a missing, unknown or malformed key, an
        expression that fails to evaluate at some ``t``, or a coefficient
        that makes the system singular.
    """
    entries = _parse_lines(config_text)
    if "kind" not in entries:
        raise ConfigError("missing key", "kind")
    kind = _KIND_NAMES.get(entries["kind"])
    if kind is None:
        raise ConfigError(
            f"expected one of {', '.join(_KIND_NAMES)}, got {entries['kind']!r}", "kind"
        )

    two_term = kind.startswith("two")
    allowed = _TWO_TERM_KEYS if two_term else _SINGLE_KEYS
    for key in sorted(allowed):
        if key not in entries:
            raise ConfigError("missing key", key)
    for key in sorted(set(entries) - allowed):
        raise ConfigError(f"not allowed for kind {entries['kind']}", key)

    try:
        horizon = int(entries["horizon"])
    except ValueError:
        raise ConfigError(f"not an integer: {entries['horizon']!r}", "horizon") from None
    first = 2 if two_term else 1
    if horizon < first:
        raise ConfigError(f"must be at least {first}", "horizon")

    alpha = _number(entries, "alpha")
    kwargs = {}
    if two_term:
        beta = _number(entries, "beta")
        if not 0.0 < alpha < beta < 2.0:
            raise ConfigError(f"need 0 < alpha < beta < 2, got {alpha} and {beta}", "beta")
        kwargs = dict(
            beta=beta,
            coeff_b=_tabulate(entries, "b", first, horizon),
            initial_d=_number(entries, "u1"),
        )
    elif not 0.0 < alpha <= 1.0:
        raise ConfigError(f"must lie in (0, 1], got {alpha}", "alpha")

    try:
        return ProblemSpec(
            kind=kind,
            alpha=alpha,
            coeff_a=_tabulate(entries, "a", first, horizon),
            forcing=_tabulate(entries, "f", first, horizon),
            initial_c=_number(entries, "u0"),
            horizon=horizon,
            name=name,
            **kwargs,
        )
    except SingularSystemError as exc:
        key = "b" if two_term else "a"
        raise ConfigError(f"singular coefficient at t={exc.t}", key) from exc


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="fracnabla",
        description="Solve linear fractional nabla difference equations.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("solve", help="solve a problem file and write CSV/SVG")
    p.add_argument("--config", required=True, type=Path)
    p.add_argument("--csv", type=Path, help="CSV output (stdout if neither --csv nor --svg)")
    p.add_argument("--svg", type=Path)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument(
        "--paper-pq",
        action="store_true",
        help="use the alternative two-term initial-value vectors (comparison runs)",
    )

    p = sub.add_parser("verify", help="solve and report the residual")
    p.add_argument("--config", required=True, type=Path)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = sub.add_parser("weights", help="dump Taylor monomial weights as CSV")
    p.add_argument("--mu", required=True, type=float)
    p.add_argument("--count", required=True, type=int)
    return parser


def _load(path: Path) -> ProblemSpec:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    return load_problem(text, name=path.stem)


def _cmd_solve(args: argparse.Namespace) -> int:
    problem = _load(args.config)
    solution = solve(problem, paper_pq=args.paper_pq)
    report = residual(problem, solution)

    csv = emit_csv(solution)
    if args.csv is not None:
        args.csv.write_text(csv, encoding="utf-8", newline="\n")
    if args.svg is not None:
        args.svg.write_text(emit_svg(solution), encoding="utf-8", newline="\n")
    if args.csv is None and args.svg is None:
        sys.stdout.write(csv)

    print(f"residual_max={format_real(report.max_abs)}", file=sys.stderr)
    if not report.max_abs <= args.tol:
        print(f"residual above tolerance {args.tol:g}", file=sys.stderr)
        return 2
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    problem = _load(args.config)
    solution = solve(problem)
    report = residual(problem, solution)
    peak = float(np.max(np.abs(solution.values.values)))

    print(f"residual_max={format_real(report.max_abs)}")
    print(f"max_abs_u={format_real(peak)}")
    if not report.max_abs <= args.tol:
        t, worst = max(report.per_point, key=lambda item: item[1])
        print(
            f"residual above tolerance {args.tol:g} (worst at t={t}: {worst:.3e})",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_weights(args: argparse.Namespace) -> int:
    if args.count < 0:
        raise ValidationError("--count must be non-negative")
    weights = monomial_weight_sequence(args.mu, args.count)
    lines = ["k,h"] + [
        f"{k},{format_real(v)}" for k, v in enumerate(weights.values, start=1)
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


_COMMANDS = {"solve": _cmd_solve, "verify": _cmd_verify, "weights": _cmd_weights}


def run(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit code: 0 success, 1 usage or
    validation error, 2 numerical failure."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return _COMMANDS[args.command](args)
    except (ValidationError, DomainError) as exc:
        print(f"fracnabla: error: {exc}", file=sys.stderr)
        return 1
    except (SingularSystemError, ArithmeticError) as exc:
        print(f"fracnabla: numerical failure: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"fracnabla: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
