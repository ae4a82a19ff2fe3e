"""Command line front end: batch verification, flow traces, Sp sampling.

Subcommands:

    verify     run the full check suite, emit a JSON report, exit 0 iff clean
    flow       emit a CSV trace comparing closed-form and RK4 flows
    sample-sp  print a deterministically sampled symplectic matrix

All outputs are byte-stable for fixed arguments.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .checks import VerifyConfig, report_is_clean, report_to_json, run_verification_suite
from .ratpoly import rational_to_text
from .structures import LiouvilleStructure, flow_closed_form, flow_numeric
from .symplectic import SymplecticSpace, is_symplectic, random_symplectic

__all__ = ["main", "emit_flow_trace", "sample_sp_text"]


def _parse_int_list(text: str) -> list:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_signs(text: str) -> list:
    signs = []
    for part in text.split(","):
        part = part.strip()
        if part in ("+", "+1", "1"):
            signs.append(1)
        elif part in ("-", "-1"):
            signs.append(-1)
        else:
            raise argparse.ArgumentTypeError(f"expected signs from {{+, -}}, got {part!r}")
    return signs


def _parse_rational_vector(text: str) -> list:
    try:
        return [Fraction(part) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from exc


def _parse_t_range(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected t range as min:max:step")
    try:
        t_min, t_max, t_step = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"non-numeric t range: {text!r}") from exc
    return t_min, t_max, t_step


def emit_flow_trace(
    structure: LiouvilleStructure,
    start_point,
    t_min: float,
    t_max: float,
    t_step: float,
    rk4_steps: int,
) -> str:
    """CSV rows of the closed-form and RK4 flows from one start point.

    Header: t,z_1,...,z_2m,zn_1,...,zn_2m,err with err the max absolute
    difference between the two columns blocks at that time.
    """
    if t_step <= 0:
        raise ValueError("t_step must be positive")
    if t_max < t_min:
        raise ValueError("t_max must not be below t_min")
    dim = structure.space.dim
    z0 = [float(x) for x in start_point]
    if len(z0) != dim:
        raise ValueError("start point dimension does not match the space")
    header = (
        "t,"
        + ",".join(f"z_{i + 1}" for i in range(dim))
        + ","
        + ",".join(f"zn_{i + 1}" for i in range(dim))
        + ",err"
    )
    lines = [header]
    index = 0
    while True:
        t = t_min + index * t_step
        if t > t_max + 1e-12:
            break
        closed = flow_closed_form(structure, t, z0)
        numeric = flow_numeric(structure, t, z0, rk4_steps)
        err = max(abs(c - n) for c, n in zip(closed, numeric))
        cells = [repr(t)] + [repr(v) for v in closed] + [repr(v) for v in numeric] + [repr(err)]
        lines.append(",".join(cells))
        index += 1
    return "\n".join(lines) + "\n"


def sample_sp_text(m: int, seed: int, count: int) -> str:
    """The sampled matrix, row per line, plus the exact symplecticity verdict."""
    space = SymplecticSpace(m)
    sampled = random_symplectic(space, seed, count)
    lines = [" ".join(rational_to_text(x) for x in row) for row in sampled.matrix]
    verdict = "true" if is_symplectic(space, sampled) else "false"
    lines.append(f"is_symplectic: {verdict}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liouville",
        description="Exact verification of monomial Liouville structures and their symmetry groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the verification suite and emit a JSON report")
    verify.add_argument("--m", type=_parse_int_list, default=[1, 2],
                        help="comma-separated half-dimensions (default 1,2)")
    verify.add_argument("--degrees", type=_parse_int_list, default=[0, 1, 2, 3, 4, 5, 6],
                        help="comma-separated degrees (default 0..6)")
    verify.add_argument("--signs", type=_parse_signs, default=[1, -1],
                        help="comma-separated signs from {+,-} (default +,-)")
    verify.add_argument("--trials", type=int, default=50)
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--out", default=None, help="write the report here instead of stdout")
    verify.add_argument("--format", choices=["json"], default="json")
    verify.add_argument("--inject-fault", action="store_true",
                        help="self-test: perturb one map coefficient so the suite must fail")
    verify.set_defaults(handler=_run_verify)

    flow = sub.add_parser("flow", help="emit a CSV flow trace (closed form vs RK4)")
    flow.add_argument("--a", type=_parse_rational_vector, required=True,
                      help="defining vector, comma-separated rationals p1,..,qm")
    flow.add_argument("--z", type=_parse_rational_vector, required=True,
                      help="start point, comma-separated rationals p1,..,qm")
    flow.add_argument("--degree", type=int, required=True)
    flow.add_argument("--sign", type=_parse_signs, default=[1],
                      help="+ or - (default +)")
    flow.add_argument("--t-range", type=_parse_t_range, default=(0.0, 1.0, 0.1),
                      help="min:max:step (default 0:1:0.1)")
    flow.add_argument("--rk4-steps", type=int, default=2000)
    flow.add_argument("--out", default=None, help="write the CSV here instead of stdout")
    flow.set_defaults(handler=_run_flow)

    sample = sub.add_parser("sample-sp", help="sample a symplectic matrix deterministically")
    sample.add_argument("--m", type=int, required=True)
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument("--count", type=int, default=10,
                        help="number of transvection factors (default 10)")
    sample.set_defaults(handler=_run_sample_sp)

    return parser


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _run_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    config = VerifyConfig(
        m_list=tuple(args.m),
        degrees=tuple(args.degrees),
        signs=tuple(dict.fromkeys(args.signs)),
        trials=args.trials,
        seed=args.seed,
        inject_fault=args.inject_fault,
    )
    try:
        config.validate()
    except ValueError as exc:
        parser.error(str(exc))
    report = run_verification_suite(config)
    _write_output(report_to_json(report), args.out)
    return 0 if report_is_clean(report) else 1


def _run_flow(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if len(args.a) % 2 != 0 or not args.a:
        parser.error("--a needs an even, positive number of entries (p and q blocks)")
    if len(args.z) != len(args.a):
        parser.error("--z must have the same number of entries as --a")
    if args.degree < 0:
        parser.error("--degree must be non-negative")
    if len(args.sign) != 1:
        parser.error("--sign takes a single + or -")
    t_min, t_max, t_step = args.t_range
    if t_step <= 0:
        parser.error("--t-range step must be positive")
    if t_max < t_min:
        parser.error("--t-range max must not be below min")
    if args.rk4_steps < 1:
        parser.error("--rk4-steps must be positive")
    space = SymplecticSpace(len(args.a) // 2)
    structure = LiouvilleStructure(space, tuple(args.a), args.degree, args.sign[0])
    trace = emit_flow_trace(
        structure, [float(x) for x in args.z], t_min, t_max, t_step, args.rk4_steps
    )
    _write_output(trace, args.out)
    return 0


def _run_sample_sp(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.m < 1:
        parser.error("--m must be a positive integer")
    if args.count < 0:
        parser.error("--count must be non-negative")
    sys.stdout.write(sample_sp_text(args.m, args.seed, args.count))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.handler(parser, args)


if __name__ == "__main__":
    raise SystemExit(main())
