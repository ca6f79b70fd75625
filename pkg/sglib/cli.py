#!/usr/bin/env python3
"""CLI for sglib - entry point for command-line interface.

stdout carries results (text or JSON), stderr carries diagnostics and logs.
Exit codes: 0 success, 1 input error, 2 internal failure.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .benchmark import VerifyHarness, bench_sylvester
from .errors import IdentityViolation, InputError, InternalError, SglibError
from .identity import TestFunction, hilbert_agrees, hilbert_series, identity_sides, numerator_coefficients
from .registry import CheckRegistry
from .semigroup import DEFAULT_ENUMERATION_CAP, make_semigroup
from .serialization import to_json_dict
from .smooth import (
    analyze_sequence,
    classify,
    compound_from_pair,
    detect_compound,
    detect_compound_set,
    detect_smooth_set,
    make_suitable_pair,
    permute_rho,
    unique_representation,
)
from .sylvester import CLOSED_FORM_POWERS, invariant_report, sums_by_enumeration, wang_wang_T
from .utils import format_rational, parse_int_list

logger = logging.getLogger(__name__)

CAP_ENV = "SGLIB_ENUMERATION_CAP"
EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


@dataclass
class CliConfig:
    output_format: str = "text"
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    seed: Optional[int] = None
    workers: int = 1
    verbosity: int = 0

    def __post_init__(self):
        if self.enumeration_cap < 1:
            raise InputError(f"enumeration cap must be >= 1, got {self.enumeration_cap}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        cap = args.enumeration_cap
        if cap is None:
            cap = _cap_from_env()
        return cls(
            output_format=args.format,
            enumeration_cap=cap,
            seed=getattr(args, "seed", None),
            workers=getattr(args, "workers", 1),
            verbosity=args.verbose,
        )


def _cap_from_env() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ENUMERATION_CAP
    try:
        return int(raw)
    except ValueError as e:
        raise InputError(f"{CAP_ENV} must be an integer, got {raw!r}") from e


class _Parser(argparse.ArgumentParser):
    """Usage errors print one line to stderr and exit with code 1."""

    def error(self, message: str):
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _gens(text: str) -> tuple[int, ...]:
    try:
        return parse_int_list(text, "integer list")
    except InputError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _join(values) -> str:
    return ",".join(str(v) for v in values) if values else "(none)"


def _emit(config: CliConfig, data: Any, text: str) -> None:
    if config.output_format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


# --- commands -----------------------------------------------------------------

def cmd_gaps(args, config: CliConfig) -> int:
    gap_set = make_semigroup(args.generators, config.enumeration_cap).gaps()
    _emit(
        config,
        to_json_dict(gap_set),
        f"gaps: {_join(gap_set.gaps)}; genus {gap_set.genus}; frobenius {gap_set.frobenius}",
    )
    return EXIT_OK


def cmd_contains(args, config: CliConfig) -> int:
    S = make_semigroup(args.generators, config.enumeration_cap)
    inside = S.contains(args.n)
    _emit(config, {"n": str(args.n), "contains": inside}, f"{args.n} {'in' if inside else 'not in'} S")
    return EXIT_OK


def cmd_apery(args, config: CliConfig) -> int:
    ap = make_semigroup(args.generators, config.enumeration_cap).apery_set(args.t)
    _emit(config, to_json_dict(ap), f"Ap(S;{ap.modulus}) = {_join(ap.elements)}")
    return EXIT_OK


def cmd_frobenius(args, config: CliConfig) -> int:
    value = make_semigroup(args.generators, config.enumeration_cap).frobenius
    _emit(config, {"frobenius": str(value)}, str(value))
    return EXIT_OK


def cmd_genus(args, config: CliConfig) -> int:
    value = make_semigroup(args.generators, config.enumeration_cap).genus
    _emit(config, {"genus": str(value)}, str(value))
    return EXIT_OK


def cmd_symmetric(args, config: CliConfig) -> int:
    S = make_semigroup(args.generators, config.enumeration_cap)
    symmetric = S.is_symmetric()
    text = "symmetric" if symmetric else "not symmetric"
    if S.is_full:
        text += " (full semigroup)"
    _emit(config, {"symmetric": symmetric, "full": S.is_full}, text)
    return EXIT_OK


def cmd_hilbert(args, config: CliConfig) -> int:
    S = make_semigroup(args.generators, config.enumeration_cap)
    series = hilbert_series(S, args.t)
    agrees = hilbert_agrees(S, args.t)
    terms = [
        "1" if e == 0 else f"x^{e}"
        for e, c in enumerate(numerator_coefficients(series)) if c
    ]
    data = {**to_json_dict(series), "agrees": agrees}
    _emit(
        config,
        data,
        f"numerator: {' + '.join(terms)}; denominator: 1 - x^{args.t}; agrees {agrees}",
    )
    return EXIT_OK if agrees else EXIT_INTERNAL


def cmd_identity(args, config: CliConfig) -> int:
    S = make_semigroup(args.generators, config.enumeration_cap)
    f = TestFunction.parse(args.f)
    report = identity_sides(S, args.t, f)
    _emit(
        config,
        {**to_json_dict(report), "f": f.describe(), "t": args.t},
        f"f(n) = {f.describe()}, t = {args.t}: lhs {format_rational(report.lhs)}, "
        f"rhs {format_rational(report.rhs)}, "
        f"congruence form {format_rational(report.rhs_congruence_form)}, holds {report.holds}",
    )
    if not report.holds:
        raise IdentityViolation(f"identity fails for {S!r} at t={args.t}")
    return EXIT_OK


def cmd_analyze(args, config: CliConfig) -> int:
    analysis = analyze_sequence(args.sequence)
    text = f"{'smooth' if analysis.is_smooth else 'not smooth'} (c = {_join(analysis.c_values)})"
    if analysis.gcd != 1:
        text += f"; gcd {analysis.gcd}"
    _emit(config, to_json_dict(analysis), text)
    return EXIT_OK


def cmd_compound(args, config: CliConfig) -> int:
    pair = make_suitable_pair(args.a, args.b)
    seq = compound_from_pair(pair)
    _emit(config, {**to_json_dict(pair), "sequence": list(seq)}, _join(seq))
    return EXIT_OK


def cmd_detect(args, config: CliConfig) -> int:
    if not args.set:
        pair = detect_compound(args.sequence)
        data = {"compound": pair is not None}
        if pair is None:
            text = "not compound"
        else:
            data.update(to_json_dict(pair))
            text = f"compound: A = {_join(pair.a)}; B = {_join(pair.b)}"
        _emit(config, data, text)
        return EXIT_OK

    found = detect_compound_set(args.sequence)
    smooth = detect_smooth_set(args.sequence)
    data = {
        "compound_ordering": list(found[0]) if found else None,
        "smooth_ordering": list(smooth.sequence) if smooth else None,
    }
    lines = [
        f"compound ordering: {_join(found[0]) if found else '(none)'}",
        f"smooth ordering: {_join(smooth.sequence) if smooth else '(none)'}",
    ]
    _emit(config, data, "\n".join(lines))
    return EXIT_OK


def cmd_rho(args, config: CliConfig) -> int:
    permuted, c_values = permute_rho(args.sequence, args.j)
    _emit(
        config,
        {"sequence": list(permuted), "c": list(c_values)},
        f"{_join(permuted)} (c = {_join(c_values)})",
    )
    return EXIT_OK


def cmd_represent(args, config: CliConfig) -> int:
    analysis = analyze_sequence(args.sequence)
    rep = unique_representation(analysis, args.n)
    membership = classify(analysis, args.n)
    _emit(
        config,
        {**to_json_dict(rep), "membership": membership.value},
        f"{args.n} = " + " + ".join(f"{d}*{g}" for d, g in zip(rep.digits, rep.sequence))
        + f"; {membership.value}",
    )
    return EXIT_OK


def _sums_table(report, columns: tuple[str, ...]) -> str:
    lines = ["m  " + "  ".join(f"{c}_m" for c in columns)]
    for m in sorted(report.S):
        row = [str(getattr(report, c)[m]) for c in columns]
        lines.append(f"{m}  " + "  ".join(row))
    lines.append(
        f"genus {report.genus}; frobenius {report.frobenius}; symmetric {report.symmetric}; "
        f"J = {report.J}; I_G = {_join(report.I_G)}"
    )
    return "\n".join(lines)


def _enumerated_sums(args, config: CliConfig, columns: tuple[str, ...]) -> int:
    """Gap-set sums for a sequence without closed forms."""
    S = make_semigroup(args.sequence, config.enumeration_cap)
    gap_set = S.gaps()
    powers = sorted(set(CLOSED_FORM_POWERS) | set(args.m))
    sums = {m: dict(zip(("S", "T"), sums_by_enumeration(S, m))) for m in powers}
    data: dict[str, Any] = {"sequence": list(args.sequence), "closed_form": None}
    for c in columns:
        data[c] = {str(m): str(sums[m][c]) for m in powers}
    data.update(
        frobenius=str(gap_set.frobenius),
        genus=str(gap_set.genus),
        symmetric=S.is_symmetric(),
    )
    lines = ["m  " + "  ".join(f"{c}_m" for c in columns)]
    lines += [f"{m}  " + "  ".join(str(sums[m][c]) for c in columns) for m in powers]
    lines.append(
        f"genus {gap_set.genus}; frobenius {gap_set.frobenius}; "
        f"symmetric {S.is_symmetric()}; not smooth, closed forms absent"
    )
    _emit(config, data, "\n".join(lines))
    return EXIT_OK


def cmd_sylvester(args, config: CliConfig) -> int:
    if not analyze_sequence(args.sequence).is_smooth:
        return _enumerated_sums(args, config, ("S", "T"))
    report = invariant_report(args.sequence, args.m, config.enumeration_cap)
    _emit(config, to_json_dict(report), _sums_table(report, ("S", "T")))
    return EXIT_OK


def cmd_alternating(args, config: CliConfig) -> int:
    if not analyze_sequence(args.sequence).is_smooth:
        return _enumerated_sums(args, config, ("T",))
    report = invariant_report(args.sequence, args.m, config.enumeration_cap)
    data = to_json_dict(report)
    data.pop("S")
    _emit(config, data, _sums_table(report, ("T",)))
    return EXIT_OK


def cmd_wangwang(args, config: CliConfig) -> int:
    value = wang_wang_T(args.a, args.b, args.m)
    _emit(config, {"a": args.a, "b": args.b, "m": args.m, "T": str(value)}, str(value))
    return EXIT_OK


def cmd_verify(args, config: CliConfig) -> int:
    if args.count < 0 or config.workers < 1:
        raise InputError("--count must be >= 0 and --workers >= 1")
    unknown = [name for name in args.check or [] if name not in CheckRegistry.list()]
    if unknown:
        raise InputError(f"unknown checks: {', '.join(unknown)}")
    harness = VerifyHarness(
        count=args.count,
        seed=config.seed if config.seed is not None else 0,
        workers=config.workers,
        checks=args.check,
    )
    summary = harness.run(output_path=args.output)
    lines = [
        f"{r['check']}: {r['passed']}/{r['passed'] + r['failed']} passed"
        for r in summary["checks"]
    ]
    lines.append(f"total: {summary['passed']} passed, {summary['failed']} failed")
    _emit(config, summary, "\n".join(lines))
    return EXIT_OK if summary["failed"] == 0 else EXIT_INTERNAL


def cmd_bench(args, config: CliConfig) -> int:
    result = bench_sylvester(args.sequence, config.enumeration_cap)
    _emit(
        config,
        result,
        f"sequence {_join(result['sequence'])}: closed form {result['closed_form_seconds']:.4f}s, "
        f"enumeration {result['enumeration_seconds']:.4f}s, "
        f"speedup {result['speedup']:.1f}x, agree {result['agree']}",
    )
    return EXIT_OK if result["agree"] else EXIT_INTERNAL


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sglib-cli",
        description="Exact computations on numerical semigroups",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--enumeration-cap", type=int, default=None,
        help=f"largest gap-enumeration window (default ${CAP_ENV} or {DEFAULT_ENUMERATION_CAP})",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name: str, func: Callable, help: str, gens: Optional[str] = None):
        p = sub.add_parser(name, help=help)
        if gens:
            p.add_argument(gens, type=_gens, help="comma-separated positive integers")
        p.set_defaults(func=func)
        return p

    add("gaps", cmd_gaps, "gap set, genus and Frobenius number", "generators")
    add("contains", cmd_contains, "membership test", "generators").add_argument(
        "--n", type=int, required=True
    )
    add("apery", cmd_apery, "Apery set", "generators").add_argument(
        "--t", type=int, required=True
    )
    add("frobenius", cmd_frobenius, "Frobenius number", "generators")
    add("genus", cmd_genus, "genus", "generators")
    add("symmetric", cmd_symmetric, "symmetry test", "generators")
    add("hilbert", cmd_hilbert, "Hilbert series numerator", "generators").add_argument(
        "--t", type=int, required=True
    )
    p = add("identity", cmd_identity, "both sides of the Apery-set identity", "generators")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--f", default="mono:1", help="poly:c0,c1,... | mono:m | exp:z | signed:m")

    add("analyze", cmd_analyze, "smoothness and c values", "sequence")
    p = add("compound", cmd_compound, "compound sequence of a suitable pair")
    p.add_argument("--a", type=_gens, required=True)
    p.add_argument("--b", type=_gens, required=True)
    add("detect", cmd_detect, "recover a suitable pair", "sequence").add_argument(
        "--set", action="store_true", help="search orderings of the entries"
    )
    add("rho", cmd_rho, "rho_j permutation", "sequence").add_argument(
        "--j", type=int, required=True
    )
    add("represent", cmd_represent, "digit representation", "sequence").add_argument(
        "--n", type=int, required=True
    )
    for name, func, help in (
        ("sylvester", cmd_sylvester, "power Sylvester sums"),
        ("alternating", cmd_alternating, "alternating power Sylvester sums"),
    ):
        add(name, func, help, "sequence").add_argument(
            "--m", type=int, nargs="*", default=[], help="extra powers, by enumeration"
        )
    p = add("wangwang", cmd_wangwang, "alternating sums of two generators")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("verify", cmd_verify, "randomized property suite")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", default=None, help="write the JSON summary here")
    p.add_argument("--check", action="append", help="restrict to this check (repeatable)")

    p = add("bench", cmd_bench, "closed forms versus enumeration")
    p.add_argument("sequence", type=_gens, nargs="?", default=None)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def run(argv: Optional[list[str]] = None) -> int:
    """Parse `argv`, run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT

    try:
        config = CliConfig.from_args(args)
        _configure_logging(config.verbosity)
        return args.func(args, config)
    except InputError as e:
        print(f"sglib-cli: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as e:
        print(f"sglib-cli: internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except SglibError as e:
        print(f"sglib-cli: error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


def main(argv: Optional[list[str]] = None) -> int:
    """Main CLI entry point."""
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
