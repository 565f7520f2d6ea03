"""Command-line interface.

Exit codes: 0 success or true verdict, 1 false verdict, 2 invalid input,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import ar_quiver, core, tilting
from .core import Algebra, InvalidAlgebraError, ModCoord
from .modset import algebra_label
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    KupischAlgebra,
    KupischError,
    exhaustive_nct_search,
    get_oracle,
    kupisch_algebra,
)
from .oracle import is_nct as oracle_is_nct

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

TABLE_COLUMNS = ("m", "l", "n", "admits", "verified", "ct_size")


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _need(args, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join(missing))


def _parse_kupisch(text: str) -> KupischAlgebra:
    try:
        return kupisch_algebra([int(part) for part in text.split(",")])
    except ValueError as exc:
        raise UsageError(f"bad Kupisch series {text!r}: {exc}") from exc


def _algebra(args) -> Algebra:
    _need(args, "m", "l")
    return core.make_algebra(args.m, args.l)


def _any_algebra(args) -> Algebra | KupischAlgebra:
    """``--kupisch`` wins over ``--m/--l``; homogeneous series become ``Algebra``."""
    if getattr(args, "kupisch", None):
        kup = _parse_kupisch(args.kupisch)
        l = kup.homogeneous_l
        if l is not None and 2 <= l <= kup.m - 1:
            return core.make_algebra(kup.m, l)
        return kup
    return _algebra(args)


def _check_n(n: int | None) -> int:
    if n is None:
        raise UsageError("missing required option: --n")
    if n < 2:
        raise UsageError(f"--n must be at least 2, got {n}")
    return n


def _modules_tsv(members: Sequence[ModCoord]) -> str:
    return "".join(f"{x.i}\t{x.j}\n" for x in members)


# classify


def cmd_classify(args) -> int:
    if args.d_rep_finite:
        _need(args, "m", "l")
        d = tilting.d_rep_finite(args.m, args.l)
        if d is None:
            _emit("no")
            return EXIT_FALSE
        _emit(f"d-representation-finite, d={d}")
        return EXIT_OK
    _need(args, "m", "l")
    n = _check_n(args.n)
    param = tilting.nct_parameterization(args.m, args.l, n)
    if param is None:
        _emit("denies")
        return EXIT_FALSE
    _emit(f"admits ({param})")
    return EXIT_OK


# ct


def _require_homogeneous(alg, action: str) -> Algebra:
    if not isinstance(alg, Algebra):
        raise UsageError(f"ct {action} needs a homogeneous algebra Lambda(m,l) with 2 <= l <= m-1")
    return alg


def _ct_build(args, alg, n: int) -> int:
    alg = _require_homogeneous(alg, "build")
    c = tilting.build_nct(alg, n)
    if args.format == "json":
        _emit(_dump({"algebra": algebra_label(alg), "n": n, "modules": c.pairs()}))
    else:
        _emit("i\tj\n" + _modules_tsv(c.members))
    return EXIT_OK


def _report_tsv(report: tilting.ConditionReport) -> str:
    lines = []
    for cond in report.conditions:
        status = "pass" if cond.passed else "fail"
        lines.append(f"{cond.name}\t{status}\t" + "; ".join(str(w) for w in cond.witnesses))
    return "\n".join(lines) + "\n"


def _ct_verify(args, alg, n: int) -> int:
    alg = _require_homogeneous(alg, "verify")
    c = tilting.build_nct(alg, n)
    report = tilting.check_conditions_a(alg, n, c) + tilting.check_conditions_b(alg, n, c)
    confirmed = oracle_is_nct(alg, c.members, n)
    passed = report.passed and confirmed
    if args.format == "json":
        payload = report.to_dict()
        payload.update(
            algebra=algebra_label(alg), n=n, modules=c.pairs(), oracle_is_nct=confirmed, passed=passed
        )
        _emit(_dump(payload))
    else:
        text = _report_tsv(report)
        text += f"oracle\t{'pass' if confirmed else 'fail'}\t\n"
        text += f"verdict\t{'pass' if passed else 'fail'}\t\n"
        _emit("condition\tstatus\twitnesses\n" + text)
    return EXIT_OK if passed else EXIT_FALSE


def _ct_search(args, alg, n: int) -> int:
    results = exhaustive_nct_search(alg, n, args.budget)
    if args.format == "json":
        _emit(_dump({"algebra": algebra_label(alg), "n": n, "results": [c.pairs() for c in results]}))
    elif not results:
        _emit("none found")
    else:
        blocks = [f"# result {k}\ni\tj\n" + _modules_tsv(c.members) for k, c in enumerate(results, 1)]
        _emit("".join(blocks))
    return EXIT_OK if results else EXIT_FALSE


def cmd_ct(args) -> int:
    n = _check_n(args.n)
    alg = _any_algebra(args)
    action = {"build": _ct_build, "verify": _ct_verify, "search": _ct_search}[args.action]
    return action(args, alg, n)


# table


def sweep_row(m: int, l: int, n: int, verify: bool, budget: int = DEFAULT_BUDGET) -> dict:
    alg = core.make_algebra(m, l)
    admits = tilting.admits_nct(m, l, n)
    ct_size = len(tilting.build_nct(alg, n)) if admits else 0
    verified = "skipped"
    if verify:
        found = exhaustive_nct_search(alg, n, budget)
        expected = [tilting.build_nct(alg, n)] if admits else []
        if found == expected:
            verified = "true-confirmed" if admits else "false-confirmed"
        else:
            verified = "mismatch"
    return {"m": m, "l": l, "n": n, "admits": admits, "verified": verified, "ct_size": ct_size}


def cmd_table(args) -> int:
    for name in ("max_m", "max_n"):
        if getattr(args, name) < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    max_l = args.max_l if args.max_l is not None else args.max_m - 1
    lines = ["\t".join(TABLE_COLUMNS)]
    mismatch = False
    for m in range(3, args.max_m + 1):
        for l in range(2, min(max_l, m - 1) + 1):
            for n in range(2, args.max_n + 1):
                row = sweep_row(m, l, n, m <= args.verify_up_to_m, args.budget)
                mismatch |= row["verified"] == "mismatch"
                row["admits"] = "true" if row["admits"] else "false"
                lines.append("\t".join(str(row[c]) for c in TABLE_COLUMNS))
    _emit("\n".join(lines))
    return EXIT_FALSE if mismatch else EXIT_OK


# quiver


def cmd_quiver(args) -> int:
    alg = _algebra(args)
    g = ar_quiver.build(alg)
    if args.highlight_n is not None:
        g = g.with_highlights(tilting.build_nct(alg, _check_n(args.highlight_n)))
    _emit(ar_quiver.export_json(g) if args.format == "json" else ar_quiver.export_dot(g))
    return EXIT_OK


# gldim / pd


def cmd_gldim(args) -> int:
    alg = _any_algebra(args)
    if isinstance(alg, Algebra):
        _emit(str(core.global_dim(alg)))
    else:
        _emit(str(get_oracle(alg).global_dim()))
    return EXIT_OK


def cmd_pd(args) -> int:
    alg = _any_algebra(args)
    if isinstance(alg, Algebra):
        members = core.indecomposables(alg)
        pd = lambda x: core.proj_dim(alg, x)  # noqa: E731
    else:
        oracle = get_oracle(alg)
        members = oracle.modules
        pd = oracle.proj_dim
    if (args.i is None) != (args.j is None):
        raise UsageError("give both --i and --j, or neither")
    if args.i is not None:
        x = ModCoord(args.i, args.j)
        if x not in members:
            raise UsageError(f"{x} is not an indecomposable module")
        _emit(str(pd(x)))
    else:
        _emit("i\tj\tpd\n" + "".join(f"{x.i}\t{x.j}\t{pd(x)}\n" for x in members))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakayama-ct",
        description="Homological combinatorics and cluster tilting for Nakayama algebras Lambda(m,l).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_opts(p, kupisch: bool = False) -> None:
        p.add_argument("--m", type=int, help="number of vertices")
        p.add_argument("--l", type=int, help="Loewy length (relations are paths of length l)")
        if kupisch:
            p.add_argument("--kupisch", help="comma-separated Kupisch series; overrides --m/--l")

    p = sub.add_parser("classify", help="does Lambda(m,l) admit an n-cluster tilting subcategory")
    algebra_opts(p)
    p.add_argument("--n", type=int)
    p.add_argument("--d-rep-finite", action="store_true", help="report d-representation-finiteness")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ct", help="build, verify or search for n-cluster tilting subcategories")
    p.add_argument("action", choices=("build", "verify", "search"))
    algebra_opts(p, kupisch=True)
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=("json", "tsv"), default="tsv")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max search nodes")
    p.set_defaults(func=cmd_ct)

    p = sub.add_parser("table", help="TSV sweep of the classification")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-l", type=int)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--verify-up-to-m", type=int, default=0, help="oracle search for m <= this")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("quiver", help="export the Auslander-Reiten quiver")
    algebra_opts(p)
    p.add_argument("--highlight-n", type=int, help="highlight the candidate n-cluster tilting set")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("gldim", help="global dimension")
    algebra_opts(p, kupisch=True)
    p.set_defaults(func=cmd_gldim)

    p = sub.add_parser("pd", help="projective dimension of M(i,j), or of every indecomposable")
    algebra_opts(p, kupisch=True)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_pd)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, InvalidAlgebraError, KupischError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
