"""Command line front end.

Subcommands:

    verify     build one family and run the full verifier battery
    physics    map a family onto N particles in D dimensions and check the
               Hamilton/Heisenberg compatibility identities numerically
    enumerate  list every family solving a given (N, D)
    catalog    write that list as deterministic JSON to a file

Exit codes: 0 all required checks passed, 1 a verification check failed,
2 usage error (bad flags, invalid parameters, unwritable output).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .catalog import Catalog, catalog_json, enumerate_solutions, run_checks
from .families import CaoSet, FamilyId, FamilyParams, build
from .physics import (
    HFormError,
    assign_ND,
    build_H,
    build_RP,
    check_hamilton_heisenberg,
    dagger_report,
    eigenvalue_note,
    max_cc_residual,
    params_from_scalar,
)
from .verify import cc_scalar, derive_mu_c

__all__ = ["main", "entrypoint"]

_INFORMATIONAL = frozenset({"dagger_defining"})


def _json_dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _family_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--family",
        required=True,
        choices=[fam.value for fam in FamilyId],
        help="operator family",
    )
    parser.add_argument("--m", type=int, required=True, help="first rank parameter")
    parser.add_argument("--n", type=int, required=True, help="second rank parameter")
    parser.add_argument("--l", type=int, default=None, help="split parameter (sl5a, sl5b only)")


def _output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["text", "json"], default="text", help="report format")
    parser.add_argument("--out", default=None, help="write the report to this path instead of stdout")


def _build_caos(args: argparse.Namespace) -> CaoSet:
    return build(FamilyId(args.family), FamilyParams(args.m, args.n, args.l))


def _checks_text(checks: dict[str, bool]) -> list[str]:
    lines = ["checks:"]
    for name in sorted(checks):
        verdict = "pass" if checks[name] else "fail"
        if name in _INFORMATIONAL:
            verdict += " (informational)"
        lines.append(f"  {name}: {verdict}")
    return lines


def cmd_verify(args: argparse.Namespace) -> int:
    caos = _build_caos(args)
    checks, grading, lam = run_checks(caos, args.seed)
    usable = bool(lam)
    if usable:
        mu, c = derive_mu_c(lam)
        mu_val, c_str = mu, str(c)
    else:
        mu_val, c_str = 0, "0"
    required_ok = all(flag for name, flag in checks.items() if name not in _INFORMATIONAL)
    if args.format == "json":
        obj = {
            "family": caos.family.value,
            "params": {"m": caos.params.m, "n": caos.params.n, "l": caos.params.l},
            "algebra_name": caos.algebra_name,
            "dim": [caos.dim.even, caos.dim.odd],
            "M": len(caos),
            "lambda": str(lam),
            "mu": mu_val,
            "c": c_str,
            "cc_usable": usable,
            "grading": grading.to_json_obj(),
            "checks": dict(sorted(checks.items())),
        }
        _emit(_json_dump(obj), args.out)
    else:
        lines = [
            f"family: {caos.family.value}  m={caos.params.m} n={caos.params.n}"
            + (f" l={caos.params.l}" if caos.params.l is not None else ""),
            f"algebra: {caos.algebra_name}  dim: ({caos.dim.even}|{caos.dim.odd})  pairs: {len(caos)}",
            f"lambda: {lam}",
            f"mu: {mu_val}  c: {c_str}",
            f"CC usable: {str(usable).lower()}",
            f"grading: dims {grading.dims}, length {grading.length}",
            *_checks_text(checks),
            f"result: {'PASS' if required_ok else 'FAIL'}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if required_ok else 1


def cmd_physics(args: argparse.Namespace) -> int:
    caos = _build_caos(args)
    lam, cc_report = cc_scalar(caos)
    if not cc_report.passed or not lam:
        print(f"error: {cc_report.details}", file=sys.stderr)
        return 1
    params = params_from_scalar(lam, mass=args.mass, omega=args.omega, hbar=args.hbar)
    ops = assign_ND(caos, args.N, args.D)
    ops = build_RP(ops, params)
    try:
        ops = build_H(ops, params)
    except HFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    check = check_hamilton_heisenberg(ops, params, args.tol)
    residual, worst = max_cc_residual(ops, params)
    dag = dagger_report(caos)
    note = eigenvalue_note(ops)
    if args.format == "json":
        obj = {
            "family": caos.family.value,
            "params": {"m": caos.params.m, "n": caos.params.n, "l": caos.params.l},
            "algebra_name": caos.algebra_name,
            "N": args.N,
            "D": args.D,
            "M": len(caos),
            "lambda": str(lam),
            "physics": {
                "params": {
                    "mass": params.mass,
                    "omega": params.omega,
                    "hbar": params.hbar,
                    "c": params.c,
                    "mu": params.mu,
                },
                "residual_max": residual,
                "hermitian_defining": dag.passed,
                "H_eigen_note": note,
            },
            "checks": {"hamilton_heisenberg": check.passed, "h_form_agreement": True},
        }
        _emit(_json_dump(obj), args.out)
    else:
        lines = [
            f"family: {caos.family.value}  algebra: {caos.algebra_name}  N={args.N} D={args.D}",
            f"lambda: {lam}  ->  mu={params.mu}, c={params.c:g}",
            f"hamilton_heisenberg: {'pass' if check.passed else 'fail'}"
            f"  (max residual {residual:.3e} at (alpha, j)={worst}, tol {args.tol:g})",
            "h_form_agreement: pass",
            f"hermitian_defining: {'true' if dag.passed else 'false'} (informational)",
            note,
            f"result: {'PASS' if check.passed else 'FAIL'}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if check.passed else 1


def _catalog_text(cat: Catalog) -> str:
    lines = [f"N={cat.N} D={cat.D} max_rank={cat.max_rank}: {len(cat.records)} solution(s)"]
    for rec in cat.records:
        params = f"m={rec.params.m} n={rec.params.n}"
        if rec.params.l is not None:
            params += f" l={rec.params.l}"
        required_ok = all(flag for name, flag in rec.checks.items() if name not in _INFORMATIONAL)
        lines.append(
            f"  {rec.family.value}({params})  {rec.algebra_name}"
            f"  lambda={rec.lam}  mu={rec.mu} c={rec.c}"
            f"  grading length {rec.grading.length}"
            f"  checks {'ok' if required_ok else 'FAILED'}"
        )
    return "\n".join(lines) + "\n"


def cmd_enumerate(args: argparse.Namespace) -> int:
    cat = enumerate_solutions(args.N, args.D, args.max_rank, args.seed)
    if args.format == "json":
        _emit(catalog_json(cat), args.out)
    else:
        _emit(_catalog_text(cat), args.out)
    all_ok = all(
        flag for rec in cat.records for name, flag in rec.checks.items() if name not in _INFORMATIONAL
    )
    return 0 if all_ok else 1


def cmd_catalog(args: argparse.Namespace) -> int:
    cat = enumerate_solutions(args.N, args.D, args.max_rank, args.seed)
    _emit(catalog_json(cat), args.out)
    print(f"wrote {len(cat.records)} record(s) to {args.out}", file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wqosc",
        description="Exact operator families for Wigner quantum oscillators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify one operator family")
    _family_args(p_verify)
    p_verify.add_argument("--seed", type=int, default=0, help="seed for the sampled identities")
    _output_args(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_phys = sub.add_parser("physics", help="check the oscillator identities for an (N, D) assignment")
    _family_args(p_phys)
    p_phys.add_argument("--N", type=int, required=True, help="particle count")
    p_phys.add_argument("--D", type=int, required=True, help="space dimension")
    p_phys.add_argument("--mass", type=float, default=1.0, help="particle mass")
    p_phys.add_argument("--omega", type=float, default=1.0, help="frequency")
    p_phys.add_argument("--hbar", type=float, default=1.0, help="Planck constant over 2 pi")
    p_phys.add_argument("--tol", type=float, default=1e-10, help="residual tolerance")
    _output_args(p_phys)
    p_phys.set_defaults(func=cmd_physics)

    p_enum = sub.add_parser("enumerate", help="list all families solving (N, D)")
    p_enum.add_argument("--N", type=int, required=True, help="particle count")
    p_enum.add_argument("--D", type=int, required=True, help="space dimension")
    p_enum.add_argument("--max-rank", type=int, default=8, help="bound on the rank parameters")
    p_enum.add_argument("--seed", type=int, default=0, help="seed for the sampled identities")
    _output_args(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_cat = sub.add_parser("catalog", help="write the (N, D) solution catalog as JSON")
    p_cat.add_argument("--N", type=int, required=True, help="particle count")
    p_cat.add_argument("--D", type=int, required=True, help="space dimension")
    p_cat.add_argument("--max-rank", type=int, default=8, help="bound on the rank parameters")
    p_cat.add_argument("--seed", type=int, default=0, help="seed for the sampled identities")
    p_cat.add_argument("--out", required=True, help="output path")
    p_cat.set_defaults(func=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    command: Callable[[argparse.Namespace], int] = args.func
    try:
        return command(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))
