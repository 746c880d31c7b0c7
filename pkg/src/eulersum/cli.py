"""Command-line surface: batch sweeps, the counterexample reproduction,
identity sweeps, and the composition experiments.

Every command is deterministic: the same configuration writes byte-identical
output.  Exit codes: 0 success, 2 parse error, 3 domain or mode error,
4 non-convergence.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .binomial import binomial_sweep
from .convolution import (
    FiniteSupport,
    WeightProfile,
    correct_rhs,
    incorrect_rhs,
    parse_profile,
)
from .errors import DomainError, ModeMismatchError, NonConvergenceError, ParseError
from .identities import (
    chu_vandermonde_check,
    find_star_violation,
    iter_star_star_rows,
    verify_star_star,
)
from .limits import (
    estimate_limit,
    run_main_theorem_experiment,
    run_r_independence_experiment,
    run_shift_invariance_experiment,
    run_weighted_composition_experiment,
)
from .scalars import (
    ComplexScalar,
    Mode,
    Real,
    format_real,
    format_scalar,
    parse_real,
    real_mode,
)
from .sequences import Constant, Convolved, SequenceSpec, parse_sequence
from .weighted import WeightFunction, parse_weight_function

#: sweeps stay exact in auto mode up to this N; beyond it rational bit sizes
#: grow quadratically and float mode takes over
AUTO_EXACT_LIMIT = 60


@dataclass(frozen=True)
class RunConfig:
    command: str
    mode: str
    N_max: int
    r: Real | None = None
    r_prime: Real | None = None
    tolerance: float = 1e-8
    window: int = 10
    out: str | None = None


def _resolve_mode(requested: str, n_max: int, parts: list[Mode]) -> Mode:
    if requested == "exact":
        if any(m is Mode.FLOAT for m in parts):
            raise DomainError("exact mode requested but an input is float-only")
        return Mode.EXACT
    if requested == "float":
        return Mode.FLOAT
    if all(m is Mode.EXACT for m in parts) and n_max <= AUTO_EXACT_LIMIT:
        return Mode.EXACT
    return Mode.FLOAT


def _real_in_mode(value: Real, mode: Mode) -> Real:
    if mode is Mode.FLOAT:
        return float(value)
    if isinstance(value, Fraction):
        return value
    raise DomainError("exact mode requested but a parameter is float-only")


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _sweep_rows(sweep: list[ComplexScalar]) -> list[str]:
    return [
        f"{N},{format_real(v.re)},{format_real(v.im)}" for N, v in enumerate(sweep)
    ]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _cmd_avg(args) -> int:
    seq = parse_sequence(args.seq)
    r = parse_real(args.r)
    mode = _resolve_mode(args.mode, args.N, [seq.mode, real_mode(r)])
    seq = seq.to_mode(mode)
    sweep = binomial_sweep(seq, args.N, _real_in_mode(r, mode))
    _emit(_sweep_rows(sweep), args.out)
    return 0


def _cmd_counterexample(args) -> int:
    profile = parse_profile(args.profile)
    r = parse_real(args.r)
    if profile.mode is not Mode.EXACT or not isinstance(r, Fraction):
        raise DomainError("the counterexample reproduction runs on exact inputs")

    ones = Constant(ComplexScalar.exact(1))
    limit = ComplexScalar.exact(1)  # every binomial average of 1 is 1
    prefix = Convolved(ones, profile).prefix(4)
    product_value = correct_rhs(profile, limit)
    r_dependent_value = incorrect_rhs(profile, r, limit)

    sweep = binomial_sweep(
        Convolved(ones.to_mode(Mode.FLOAT), profile.to_mode(Mode.FLOAT)),
        args.N,
        float(r),
    )
    estimate = estimate_limit(sweep, args.tolerance, args.window)
    gap_product = abs(estimate.value - product_value.to_float())
    gap_r_dependent = abs(estimate.value - r_dependent_value.to_float())

    if product_value == r_dependent_value:
        verdict = "formulas coincide"
    elif gap_product <= args.tolerance < gap_r_dependent:
        verdict = "r-dependent formula refuted"
    else:
        verdict = "inconclusive at this tolerance"

    lines = [
        "transformed prefix: " + ", ".join(format_scalar(v) for v in prefix),
        f"sweep limit estimate (r={format_real(r)}, N_max={args.N}, "
        f"window={args.window}): {format_scalar(estimate.value)}"
        + ("" if estimate.converged else "  [not converged]"),
        f"product formula L*sum(lambda): {format_scalar(product_value)}",
        f"r-dependent formula:           {format_scalar(r_dependent_value)}",
        f"gap to product formula: {gap_product:.3e}; "
        f"gap to r-dependent formula: {gap_r_dependent:.3e}",
        f"verdict: {verdict}",
    ]
    print("\n".join(lines))
    if args.out:
        _emit(_sweep_rows(sweep), args.out)
    return 0


def _cmd_identities(args) -> int:
    report = verify_star_star(args.n_max)
    violation = find_star_violation(args.n_max)
    ell_one = find_star_violation(args.n_max, ells=[1])

    chu_bad = 0
    for a in range(-args.chu_max, args.chu_max + 1):
        for b in range(-args.chu_max, args.chu_max + 1):
            for r in range(args.chu_max + 1):
                if chu_vandermonde_check(a, b, r) != 0:
                    chu_bad += 1

    lines = [
        f"corrected identity sweep (n <= {args.n_max}): "
        f"{report.checked} triples checked, {len(report.violations)} violations",
        (
            "all-ones claim first violation: "
            f"n={violation.n} k={violation.k} l={violation.ell} "
            f"(sum = {violation.lhs}, claimed {violation.claimed})"
            if violation
            else "all-ones claim: no violation found"
        ),
        (
            f"all-ones claim on the l=1 slice: holds for all n <= {args.n_max}"
            if ell_one is None
            else f"all-ones claim fails on l=1 at n={ell_one.n} k={ell_one.k}"
        ),
        f"Chu-Vandermonde residuals (|a|,|b|,r <= {args.chu_max}): "
        + ("all zero" if chu_bad == 0 else f"{chu_bad} nonzero"),
    ]
    print("\n".join(lines))
    if args.out:
        rows = [
            f"{n},{k},{ell},{lhs},{rhs},{str(ok).lower()}"
            for n, k, ell, lhs, rhs, ok in iter_star_star_rows(args.n_max)
        ]
        _emit(rows, args.out)
    return 0


def _cmd_compose(args) -> int:
    seq = parse_sequence(args.seq)
    r = parse_real(args.r)
    parts = [seq.mode, real_mode(r)]

    profile: WeightProfile | None = None
    weight_fn: WeightFunction | None = None
    if args.experiment == "main":
        if args.profile is None:
            raise DomainError("the main experiment needs --profile")
        profile = parse_profile(args.profile)
        parts.append(profile.mode)
    if args.experiment == "weighted":
        if args.weight is None:
            raise DomainError("the weighted experiment needs --weight")
        weight_fn = parse_weight_function(args.weight)
        parts.append(weight_fn.mode)

    mode = _resolve_mode(args.mode, args.N, parts)
    seq = seq.to_mode(mode)
    r = _real_in_mode(r, mode)

    if args.experiment == "main":
        report = run_main_theorem_experiment(
            seq, profile.to_mode(mode), r, args.N, args.tolerance, args.window
        )
        dump = report.convolved_sweep
    elif args.experiment == "shift":
        report = run_shift_invariance_experiment(
            seq, args.depth, r, args.N, args.tolerance, args.window
        )
        dump = None
    elif args.experiment == "r-independence":
        if args.r_prime is None:
            raise DomainError("the r-independence experiment needs --r-prime")
        r_prime = _real_in_mode(parse_real(args.r_prime), mode)
        report = run_r_independence_experiment(
            seq, r, r_prime, args.N, args.tolerance, args.window
        )
        dump = None
    else:  # weighted
        report = run_weighted_composition_experiment(
            weight_fn.to_mode(mode), seq, r, args.N, args.tolerance, args.window
        )
        dump = report.composed_sweep

    print("\n".join(report.summary_lines()))
    if args.out and dump is not None:
        _emit(_sweep_rows(dump), args.out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, *, mode: bool = True) -> None:
    parser.add_argument("--out", default=None, help="write CSV rows to this path")
    if mode:
        parser.add_argument(
            "--mode",
            choices=["exact", "float", "auto"],
            default="auto",
            help="arithmetic mode; auto = exact iff all inputs are rational "
            f"and N <= {AUTO_EXACT_LIMIT}",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulersum",
        description="Binomial (Euler) averages, convolution summation methods, "
        "and weighted means.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    avg = sub.add_parser("avg", help="sweep the binomial averages of a sequence")
    avg.add_argument("--seq", required=True, help="sequence mini-language spec")
    avg.add_argument("--r", required=True, help="binomial parameter in (0,1)")
    avg.add_argument("--N", type=int, required=True, help="largest row to sweep")
    _add_common(avg)

    ce = sub.add_parser(
        "counterexample",
        help="reproduce the refutation of the r-dependent composition formula",
    )
    ce.add_argument("--profile", default="finite:1/3,1/3,1/3")
    ce.add_argument("--r", default="1/2")
    ce.add_argument("--N", type=int, default=100)
    ce.add_argument("--tolerance", type=float, default=1e-8)
    ce.add_argument("--window", type=int, default=10)
    _add_common(ce, mode=False)

    ident = sub.add_parser("identities", help="exact combinatorial identity sweeps")
    ident.add_argument("--n-max", type=int, default=25, dest="n_max")
    ident.add_argument("--chu-max", type=int, default=12, dest="chu_max")
    _add_common(ident, mode=False)

    comp = sub.add_parser("compose", help="composition and invariance experiments")
    comp.add_argument(
        "--experiment",
        required=True,
        choices=["main", "shift", "r-independence", "weighted"],
    )
    comp.add_argument("--seq", required=True)
    comp.add_argument("--profile", default=None, help="weight profile (main)")
    comp.add_argument("--weight", default=None, help="weight function (weighted)")
    comp.add_argument("--r", required=True)
    comp.add_argument("--r-prime", default=None, dest="r_prime")
    comp.add_argument("--depth", type=int, default=3, help="shift depth (shift)")
    comp.add_argument("--N", type=int, default=200)
    comp.add_argument("--tolerance", type=float, default=1e-8)
    comp.add_argument("--window", type=int, default=10)
    _add_common(comp)

    return parser


_DISPATCH = {
    "avg": _cmd_avg,
    "counterexample": _cmd_counterexample,
    "identities": _cmd_identities,
    "compose": _cmd_compose,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ModeMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
