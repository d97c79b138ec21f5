"""Command-line entry point.

Every verb prints one JSON report to stdout with the shape
{command, seed, inputs, result, diagnostics}; a short human summary
goes to stderr.  Exit codes: 0 success, 2 parse/validation, 3 budget
or scan cap, 4 internal consistency failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .polyring import GREVLEX, LEX, ExponentOverflowError
from .groebner import BudgetExceededError, Ideal, groebner_basis
from . import idealops
from .idealops import SelfCheckError
from .monomial import (
    BelowThresholdError,
    DecompositionError,
    MonomialIdeal,
    MonomialPrime,
    NotAssociatedError,
    ThresholdCapError,
    associated_primes,
    from_polynomial_ideal,
    lambda_candidates,
    primary_decomposition,
)
from . import theoremlab
from .theoremlab import (
    NotOpenError,
    PickError,
    ScanCapError,
    WindowExhaustedError,
)
from .parser import ParseError, format_ideal, parse_ideals

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4

_BUDGET_ERRORS = (
    BudgetExceededError,
    WindowExhaustedError,
    ScanCapError,
    ThresholdCapError,
    ExponentOverflowError,
)
_INTERNAL_ERRORS = (DecompositionError, SelfCheckError)
_VALIDATION_ERRORS = (
    ParseError,
    PickError,
    NotOpenError,
    NotAssociatedError,
    BelowThresholdError,
    KeyError,
    ValueError,
)


class CliError(ValueError):
    pass


def _ideal_text(I: Ideal) -> str:
    return format_ideal(I, include_ring=False)


def _mono(I: Ideal) -> MonomialIdeal:
    try:
        return from_polynomial_ideal(I)
    except ValueError:
        raise CliError(
            "this command needs a monomial ideal (single-term generators)"
        )


def _parse_prime(ring, text: str) -> MonomialPrime:
    names = [v.strip() for v in text.split(",") if v.strip()]
    if not names:
        raise CliError("empty prime specification")
    return MonomialPrime.of_vars(ring, names)


def _parse_prime_set(ring, text: str) -> List[MonomialPrime]:
    parts = [p for p in (s.strip() for s in text.split(";")) if p]
    if not parts:
        raise CliError("empty prime-set specification")
    return [_parse_prime(ring, p) for p in parts]


def _emit(command: str, seed: int, inputs: dict, result, diagnostics=None) -> None:
    report = {
        "command": command,
        "seed": seed,
        "inputs": inputs,
        "result": result,
        "diagnostics": diagnostics or {},
    }
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def _summary(text: str) -> None:
    sys.stderr.write(text + "\n")


# ---------------------------------------------------------------------------
# verbs

def _cmd_gb(args) -> None:
    ring, (I,) = parse_ideals([args.ideal], args.order)
    gb = groebner_basis(I)
    _emit(
        "gb",
        args.seed,
        {"ideal": args.ideal, "order": ring.order, "ring": list(ring.variables)},
        {"basis": [str(g) for g in gb]},
    )
    _summary("reduced basis: %s" % ", ".join(str(g) for g in gb))


def _cmd_binary(verb, args) -> None:
    ring, (I, J) = parse_ideals([args.left, args.right], args.order)
    if verb == "intersect":
        out = idealops.intersect(I, J)
        result = {"generators": [str(g) for g in out.generators]}
    elif verb == "quotient":
        out = idealops.quotient(I, J)
        result = {"generators": [str(g) for g in out.generators]}
    else:
        out, exponent = idealops.saturate(I, J)
        result = {
            "generators": [str(g) for g in out.generators],
            "exponent": exponent,
        }
    _emit(
        verb,
        args.seed,
        {"left": args.left, "right": args.right, "order": ring.order},
        result,
    )
    _summary("%s: %s" % (verb, _ideal_text(out)))


def _cmd_decompose(args) -> None:
    ring, (I,) = parse_ideals([args.ideal], args.order)
    dec = primary_decomposition(_mono(I))
    result = {
        "components": [
            {"prime": str(p), "component": str(q)} for p, q in dec.components
        ],
        "irredundant": dec.irredundant,
        "minimal": dec.minimal,
    }
    _emit("decompose", args.seed, {"ideal": args.ideal}, result)
    _summary(
        "primary decomposition: "
        + " ∩ ".join(str(q) for _, q in dec.components)
    )


def _cmd_ass(args) -> None:
    ring, (I,) = parse_ideals([args.ideal], args.order)
    primes = associated_primes(_mono(I))
    _emit(
        "ass",
        args.seed,
        {"ideal": args.ideal},
        {"associated_primes": [str(p) for p in primes]},
    )
    _summary("Ass: %s" % ", ".join(str(p) for p in primes))


def _cmd_lambda(args) -> None:
    ring, (I,) = parse_ideals([args.ideal], args.order)
    M = _mono(I)
    P = _parse_prime(ring, args.prime)
    Q = lambda_candidates(M, P, args.power)
    _emit(
        "lambda",
        args.seed,
        {"ideal": args.ideal, "prime": args.prime, "power": args.power},
        {"component": str(Q)},
    )
    _summary("component: %s" % Q)


def _cmd_compat(args) -> None:
    ring, (I,) = parse_ideals([args.ideal], args.order)
    M = _mono(I)
    picks = {}
    for spec in args.pick:
        if "=" not in spec:
            raise CliError("--pick expects PRIME=POWER, got %r" % spec)
        prime_text, power_text = spec.rsplit("=", 1)
        P = _parse_prime(ring, prime_text)
        picks[P] = lambda_candidates(M, P, int(power_text))
    report = theoremlab.check_compatibility(M, picks)
    _emit(
        "compat",
        args.seed,
        {"ideal": args.ideal, "picks": list(args.pick)},
        report.as_dict(),
    )
    _summary("compatible: %s" % report.compatible)


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    with open(path) as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise CliError("config file must contain a JSON object")
    return cfg


def _cmd_indep(args) -> None:
    cfg = _load_config(args.config)
    ideal_text = args.ideal or cfg.get("ideal")
    x_text = args.x or cfg.get("x")
    depth = args.sample_depth or cfg.get("sample_depth") or 4
    seed = args.seed if args.seed is not None else cfg.get("seed", 0)
    if not ideal_text or not x_text:
        raise CliError("indep needs an ideal and --x (flags or config)")
    ring, (I,) = parse_ideals([ideal_text], args.order)
    M = _mono(I)
    X = set(_parse_prime_set(ring, x_text))
    report = theoremlab.check_independence(M, X, depth)
    poset = theoremlab.ass_poset(associated_primes(M))
    open_verdict = theoremlab.is_open_subset(X, poset)
    _emit(
        "indep",
        seed,
        {"ideal": ideal_text, "x": x_text, "sample_depth": depth},
        report.as_dict(),
        {"x_is_open": open_verdict},
    )
    _summary("verdict: %s (X open: %s)" % (report.verdict, open_verdict))


def _cmd_qx(args) -> None:
    ring, (I,) = parse_ideals([args.ideal], args.order)
    M = _mono(I)
    X = set(_parse_prime_set(ring, args.x))
    Q = theoremlab.canonical_qx(M, X)
    _emit(
        "qx",
        args.seed,
        {"ideal": args.ideal, "x": args.x},
        {"q_x": str(Q)},
    )
    _summary("Q_X = %s" % Q)


def _cmd_ar(args) -> None:
    ring, (J, N) = parse_ideals([args.j, args.n], args.order)
    report = theoremlab.ar_number(J, N, horizon=args.horizon, k_cap=args.k_cap)
    _emit(
        "ar",
        args.seed,
        {"j": args.j, "n": args.n, "horizon": args.horizon},
        report.as_dict(),
    )
    _summary("AR number (window-verified): %d" % report.k)


def _cmd_thm33(args) -> None:
    exponents = [int(x) for x in args.n.split(",")]
    texts = list(args.ideal) + [args.j]
    ring, parsed = parse_ideals(texts, args.order)
    ideals, J = parsed[:-1], parsed[-1]
    holds = theoremlab.thm33_identity_check(ideals, exponents, J, args.k)
    _emit(
        "thm33",
        args.seed,
        {"ideals": list(args.ideal), "n": exponents, "j": args.j, "k": args.k},
        {"holds": holds},
    )
    _summary("identity holds: %s" % holds)


def _cmd_growth(args) -> None:
    cfg = _load_config(args.config)
    texts = list(args.ideal) or list(cfg.get("ideals", []))
    n_max = args.n_max or cfg.get("n_max")
    seed = args.seed if args.seed is not None else cfg.get("seed", 0)
    if not texts or not n_max:
        raise CliError("growth needs ideals and --n-max (flags or config)")
    ring, parsed = parse_ideals(texts, args.order)
    monos = [_mono(I) for I in parsed]
    report = theoremlab.linear_growth_experiment(monos, int(n_max))
    diagnostics = {}
    if args.out_dir:
        from . import plots

        os.makedirs(args.out_dir, exist_ok=True)
        csv_path = os.path.join(args.out_dir, "growth.csv")
        png_path = os.path.join(args.out_dir, "growth.png")
        json_path = os.path.join(args.out_dir, "report.json")
        with open(csv_path, "w") as fh:
            fh.write(plots.growth_csv(report))
        plots.plot_growth(report, png_path)
        with open(json_path, "w") as fh:
            json.dump(report.as_dict(), fh, sort_keys=True, indent=2)
        diagnostics["artifacts"] = [csv_path, png_path, json_path]
    _emit(
        "growth",
        seed,
        {"ideals": texts, "n_max": int(n_max)},
        report.as_dict(),
        diagnostics,
    )
    _summary("k_empirical = %d over %d grid points" % (report.k_empirical, len(report.points)))


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="primdec",
        description="Exact primary-decomposition toolkit and theorem lab",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def common(p, seed_default=0):
        p.add_argument("--order", choices=[LEX, GREVLEX], default=GREVLEX)
        p.add_argument("--seed", type=int, default=seed_default)

    p = sub.add_parser("gb", help="reduced Groebner basis")
    p.add_argument("ideal")
    common(p)

    for verb in ("intersect", "quotient", "saturate"):
        p = sub.add_parser(verb)
        p.add_argument("left")
        p.add_argument("right")
        common(p)

    p = sub.add_parser("decompose", help="primary decomposition (monomial)")
    p.add_argument("ideal")
    common(p)

    p = sub.add_parser("ass", help="associated primes (monomial)")
    p.add_argument("ideal")
    common(p)

    p = sub.add_parser("lambda", help="one P-primary component from the power family")
    p.add_argument("ideal")
    p.add_argument("--prime", required=True)
    p.add_argument("--power", type=int, required=True)
    common(p)

    p = sub.add_parser("compat", help="compatibility of picked components")
    p.add_argument("ideal")
    p.add_argument("--pick", action="append", required=True, metavar="PRIME=POWER")
    common(p)

    p = sub.add_parser("indep", help="independence of intersections over X")
    p.add_argument("ideal", nargs="?")
    p.add_argument("--x")
    p.add_argument("--sample-depth", type=int, default=None)
    p.add_argument("--config")
    p.add_argument("--order", choices=[LEX, GREVLEX], default=GREVLEX)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("qx", help="canonical invariant intersection over open X")
    p.add_argument("ideal")
    p.add_argument("--x", required=True)
    common(p)

    p = sub.add_parser("ar", help="window-verified Artin-Rees number")
    p.add_argument("--j", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--horizon", type=int, default=12)
    p.add_argument("--k-cap", type=int, default=None)
    common(p)

    p = sub.add_parser("thm33", help="intersection identity check")
    p.add_argument("--ideal", action="append", required=True)
    p.add_argument("--n", required=True, help="comma-separated exponents")
    p.add_argument("--j", required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)

    p = sub.add_parser("growth", help="linear growth grid experiment")
    p.add_argument("--ideal", action="append", default=[])
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--config")
    p.add_argument("--out-dir", default=None)
    p.add_argument("--order", choices=[LEX, GREVLEX], default=GREVLEX)
    p.add_argument("--seed", type=int, default=None)

    return top


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "gb":
            _cmd_gb(args)
        elif args.verb in ("intersect", "quotient", "saturate"):
            _cmd_binary(args.verb, args)
        elif args.verb == "decompose":
            _cmd_decompose(args)
        elif args.verb == "ass":
            _cmd_ass(args)
        elif args.verb == "lambda":
            _cmd_lambda(args)
        elif args.verb == "compat":
            _cmd_compat(args)
        elif args.verb == "indep":
            _cmd_indep(args)
        elif args.verb == "qx":
            _cmd_qx(args)
        elif args.verb == "ar":
            _cmd_ar(args)
        elif args.verb == "thm33":
            _cmd_thm33(args)
        elif args.verb == "growth":
            _cmd_growth(args)
        else:  # pragma: no cover
            raise CliError("unknown verb %r" % args.verb)
    except _INTERNAL_ERRORS as e:
        _summary("internal consistency failure: %s" % e)
        return EXIT_INTERNAL
    except _BUDGET_ERRORS as e:
        _summary("budget exhausted: %s" % e)
        return EXIT_BUDGET
    except _VALIDATION_ERRORS as e:
        _summary("error: %s" % e)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
