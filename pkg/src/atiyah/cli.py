"""Command-line interface.

Exit codes: 0 on success, 1 when a verification reports false, 2 on
malformed input.  Limits can be set with flags or the environment:

* ``ATIYAH_MAX_K``: largest k for lift, simplicial, compare and coeffs (default 4)
* ``ATIYAH_IDENTITY_MAX_K``: largest k for identity (default 5)
* ``ATIYAH_STRETCH``: ``1`` enables the slow runs (compare at k = 4, identity at k = 6)
* ``ATIYAH_JOBS``: worker processes for the permutation sums (default 1)
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from atiyah import serialize
from atiyah.algebra import format_coeff
from atiyah.lift import enumerate_trace_basis, lift_exponential_atiyah, verify_total_closed
from atiyah.reference import reference_checks
from atiyah.simplicial import green_p1_example, monomial_simplex_integral, simplicial_atiyah_cochain, simplicial_level
from atiyah.verify import agreement_check, identity_sides, leading_coefficient_check

FORMATS = ("text", "json", "latex")


class UsageError(Exception):
    pass


@dataclass
class Config:
    max_k: int = 4
    identity_max_k: int = 5
    stretch: bool = False
    jobs: int = 1

    @property
    def compare_max_k(self) -> int:
        return min(self.max_k, 4 if self.stretch else 3)

    @property
    def identity_limit(self) -> int:
        return self.identity_max_k + (1 if self.stretch else 0)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def config_from(args) -> Config:
    cfg = Config(
        max_k=_env_int("ATIYAH_MAX_K", 4),
        identity_max_k=_env_int("ATIYAH_IDENTITY_MAX_K", 5),
        stretch=os.environ.get("ATIYAH_STRETCH", "") not in ("", "0"),
        jobs=_env_int("ATIYAH_JOBS", 1),
    )
    if args.max_k is not None:
        cfg.max_k = args.max_k
    if args.stretch:
        cfg.stretch = True
    if args.jobs is not None:
        cfg.jobs = args.jobs
    if cfg.jobs < 1:
        raise UsageError("jobs must be at least 1")
    return cfg


def _check_k(k: int, limit: int, what: str = "k"):
    if not 1 <= k <= limit:
        raise UsageError(f"{what} = {k} outside the configured range 1..{limit}")


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, output lines)


def cmd_lift(args, cfg: Config):
    _check_k(args.k, cfg.max_k)
    lift = lift_exponential_atiyah(args.k, cfg.max_k)
    ok = True
    extra = []
    if args.verify:
        report = verify_total_closed(lift)
        ok = report.closed
        extra = report.lines()
        if args.k == 4:
            for check in reference_checks():
                extra += check.lines()
                ok = ok and check.satisfied
    if args.format == "json":
        if args.verify:
            print("\n".join(extra), file=sys.stderr)
        return (0 if ok else 1), [serialize.serialize_lift(lift)]
    if args.format == "latex":
        return (0 if ok else 1), [serialize.lift_latex(lift)] + [f"% {line}" for line in extra]
    return (0 if ok else 1), serialize.lift_text(lift) + extra


def cmd_simplicial(args, cfg: Config):
    _check_k(args.k, cfg.max_k)
    if args.level is not None:
        if not 1 <= args.level <= args.k:
            raise UsageError(f"level = {args.level} outside 1..{args.k}")
        c = simplicial_level(args.k, args.level)
        if args.format == "json":
            return 0, [serialize.dumps(serialize.cochain_to_json(c))]
        if args.format == "latex":
            return 0, [serialize.cochain_latex(c)]
        return 0, [serialize.cochain_text(c)]
    t = simplicial_atiyah_cochain(args.k, cfg.max_k)
    if args.format == "json":
        return 0, [serialize.serialize_lift(t)]
    if args.format == "latex":
        return 0, [serialize.lift_latex(t)]
    return 0, serialize.lift_text(t, header="simplicial")


def cmd_compare(args, cfg: Config):
    _check_k(args.k, cfg.compare_max_k)
    report = agreement_check(args.k, cfg.max_k)
    return (0 if report.agrees else 1), report.lines()


def cmd_identity(args, cfg: Config):
    _check_k(args.k, cfg.identity_limit)
    a, b = identity_sides(args.k, cfg.jobs)
    ok = a == b
    lines = [
        f"k = {args.k}",
        f"terms: A has {len(a)}, B has {len(b)}",
        f"identity A = B: {'true' if ok else 'false'}",
    ]
    return (0 if ok else 1), lines


def cmd_basis(args, cfg: Config):
    if args.p < 1 or args.q < 1:
        raise UsageError("basis needs p >= 1 and q >= 1")
    basis = enumerate_trace_basis(args.p, args.q)
    lines = [f"(p, q) = ({args.p}, {args.q}): {len(basis)} classes"]
    for w in basis.elements:
        lines.append("tr(" + " ".join(f"B{x}" for x in w) + ")")
    return 0, lines


def _parse_exponents(text: str) -> list:
    if text.strip() == "":
        return []
    try:
        exps = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"exponents must be comma separated integers, got {text!r}") from None
    return exps


def cmd_integrate(args, cfg: Config):
    exps = _parse_exponents(args.exponents)
    if args.p < 0:
        raise UsageError("p must be non-negative")
    try:
        value = monomial_simplex_integral(args.p, exps)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return 0, [format_coeff(value)]


def cmd_coeffs(args, cfg: Config):
    _check_k(args.max, cfg.max_k, "max")
    rows = leading_coefficient_check(args.max, cfg.max_k)
    lines = ["k | lift | simplicial | (k-1)!k!/(2k-1)! | match"]
    for r in rows:
        lines.append(
            f"{r.k} | {format_coeff(r.lift)} | {format_coeff(r.simplicial)} | {format_coeff(r.law)} | "
            f"{'true' if r.ok else 'false'}"
        )
    return (0 if all(r.ok for r in rows) else 1), lines


def cmd_green(args, cfg: Config):
    return 0, green_p1_example(args.generator).lines()


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="atiyah", description="Exact exponential Atiyah class representatives.")
    parser.add_argument("--max-k", type=int, default=None, help="cap on k (env ATIYAH_MAX_K, default 4)")
    parser.add_argument("--stretch", action="store_true", help="allow the slow runs (env ATIYAH_STRETCH)")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes (env ATIYAH_JOBS)")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("lift", help="lift tr(expat^k) to a closed total cochain")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("simplicial", help="fibre integrals of tr(κ^k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_simplicial)

    p = sub.add_parser("compare", help="compare the two constructions")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("identity", help="check the permutation identity A = B")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("basis", help="list cyclic trace classes")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("integrate", help="integral of a t-monomial over the p-simplex")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--exponents", required=True)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("coeffs", help="leading coefficients against (k-1)!k!/(2k-1)!")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("green-example", help="rank-one example with a closed generator")
    p.add_argument("--generator", default="dz/z")
    p.set_defaults(func=cmd_green)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = config_from(args)
        code, lines = args.func(args, cfg)
    except UsageError as e:
        print(f"atiyah: error: {e}", file=err)
        return 2
    out.write("\n".join(lines) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
