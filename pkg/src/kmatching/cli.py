"""Command-line front end.

    kmatching report <file> [--k-max K] [--method formula|oracle|recurrence|all] [--force]
    kmatching family <kind> <params...> <k> [--check]
    kmatching verify identities|formulas|all [--trials T] [--seed S] [--n-max N]

JSON goes to stdout, diagnostics to stderr. Every number in the JSON is a
decimal string. Exit codes: 0 success, 1 usage or parse error, 2 girth
precondition violated, 3 verification failure or method disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .families import FamilyCountQuery, NoClosedFormError, family_count
from .formulas import REQUIRED_GIRTH, GirthPreconditionError, formula_applies, p_formula
from .graph import FamilySpec, GraphError, generate, girth, parse_edge_list
from .invariants import degree_invariants, incidence_invariants
from .matchings import MatchCount, Method, count_matchings_oracle, count_matchings_recurrence
from .verify import merge_reports, run_formula_vs_oracle, run_identity_suite

EXIT_OK, EXIT_USAGE, EXIT_GIRTH, EXIT_VERIFY = 0, 1, 2, 3

METHODS = ("formula", "oracle", "recurrence", "all")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _s(x) -> str:
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    return str(x)


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _formula_count(g, k: int, force: bool) -> MatchCount:
    if k == 0:
        return MatchCount(0, 1, Method.FORMULA)
    if k == 1:
        return MatchCount(1, g.m, Method.FORMULA)
    return p_formula(g, k, force=force)


def build_report(g, k_max: int, method: str, force: bool) -> tuple[dict, int]:
    """Assemble the ``report`` JSON and its exit code.

    Raises :class:`GirthPreconditionError` when ``method="formula"`` and a
    requested k is outside its girth hypothesis without ``force``.
    """
    g_girth = girth(g)
    d, i = degree_invariants(g), incidence_invariants(g)
    methods = ("formula", "oracle", "recurrence") if method == "all" else (method,)
    warnings: list[str] = []
    counts: dict[str, list[dict]] = {}

    for meth in methods:
        rows = []
        for k in range(k_max + 1):
            if meth == "oracle":
                c = count_matchings_oracle(g, k)
            elif meth == "recurrence":
                c = count_matchings_recurrence(g, k)
            else:
                if k > max(REQUIRED_GIRTH):
                    warnings.append(f"no closed form for k={k}")
                    continue
                guarded = k >= 2 and not formula_applies(k, g_girth)
                if guarded and not force and method == "all":
                    warnings.append(
                        f"formula for k={k} skipped: needs girth >= {REQUIRED_GIRTH[k]}, graph has {g_girth}"
                    )
                    continue
                c = _formula_count(g, k, force)
                if not c.girth_ok:
                    warnings.append(f"formula for k={k} forced outside its girth hypothesis")
            rows.append({"k": _s(c.k), "value": _s(c.value), "method": c.method.value, "girth_ok": c.girth_ok})
        counts[meth] = rows

    disagreements = []
    if len(methods) > 1:
        by_k: dict[str, dict[str, str]] = {}
        for meth, rows in counts.items():
            for row in rows:
                if row["girth_ok"]:
                    by_k.setdefault(row["k"], {})[meth] = row["value"]
        for k, vals in sorted(by_k.items(), key=lambda kv: int(kv[0])):
            if len(set(vals.values())) > 1:
                disagreements.append({"k": k, "values": vals})

    report = {
        "graph": {"n": _s(g.n), "m": _s(g.m), "girth": str(g_girth)},
        "invariants": {
            "m1": _s(d.m1),
            "m2": _s(d.m2),
            "f": _s(d.f),
            "m1_general": {_s(k): _s(v) for k, v in d.m1_general.items()},
            "m2_general": {_s(k): _s(v) for k, v in d.m2_general.items()},
            "em1": _s(d.em1),
            "em2": _s(d.em2),
            "alpha": _s(i.alpha),
            "alpha_general": {_s(k): _s(v) for k, v in i.alpha_general.items()},
            "beta": _s(i.beta),
            "gamma": _s(i.gamma),
            "lambda_count": _s(i.lambda_count),
        },
        "matchings": counts,
        "disagreements": disagreements,
        "warnings": warnings,
    }
    return report, (EXIT_VERIFY if disagreements else EXIT_OK)


def cmd_report(args) -> int:
    try:
        with open(args.file, encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    except UnicodeDecodeError:
        print(f"error: {args.file} is not ASCII text", file=sys.stderr)
        return EXIT_USAGE
    try:
        g = parse_edge_list(text)
    except GraphError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report, code = build_report(g, args.k_max, args.method, args.force)
    except GirthPreconditionError as exc:
        print(f"error: {exc} (use --force to compute anyway)", file=sys.stderr)
        return EXIT_GIRTH
    _dump(report)
    for d in report["disagreements"]:
        print(f"disagreement at k={d['k']}: {d['values']}", file=sys.stderr)
    return code


def cmd_family(args) -> int:
    if len(args.values) < 2:
        print("error: family needs at least one parameter and k", file=sys.stderr)
        return EXIT_USAGE
    *params, k = args.values
    try:
        spec = FamilySpec(args.kind, tuple(params))
        count = family_count(FamilyCountQuery(spec, k))
    except (GraphError, NoClosedFormError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = {"family": args.kind, "params": [_s(p) for p in params], "k": _s(k), "formula": _s(count.value)}
    code = EXIT_OK
    if args.check:
        oracle = count_matchings_oracle(generate(spec), k).value
        out["oracle"] = _s(oracle)
        out["agree"] = oracle == count.value
        if oracle != count.value:
            print(f"mismatch: formula {count.value} != oracle {oracle}", file=sys.stderr)
            code = EXIT_VERIFY
    _dump(out)
    return code


def cmd_verify(args) -> int:
    try:
        reports = []
        if args.suite in ("identities", "all"):
            reports.append(run_identity_suite(args.trials, args.seed, n_max=args.n_max))
        if args.suite in ("formulas", "all"):
            reports.append(run_formula_vs_oracle(args.trials, args.seed, n_max=args.n_max))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = reports[0] if len(reports) == 1 else merge_reports(*reports)
    sys.stdout.write(report.to_json() + "\n")
    print(
        f"{report.trials} graphs, {report.checks} checks, {report.skipped} skipped, "
        f"{len(report.failures)} failures, {len(report.findings)} findings",
        file=sys.stderr,
    )
    return EXIT_OK if report.passed else EXIT_VERIFY


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kmatching", description="Exact k-matching counts and degree-based invariants.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("report", help="invariants and matching counts of an edge-list file")
    p.add_argument("file")
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--method", choices=METHODS, default="all")
    p.add_argument("--force", action="store_true", help="evaluate formulas outside their girth hypothesis")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("family", help="closed-form count for a named family")
    p.add_argument("kind")
    p.add_argument("values", nargs="+", type=int, metavar="PARAM_OR_K")
    p.add_argument("--check", action="store_true", help="also print the enumeration oracle value")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="seeded randomized cross-check suites")
    p.add_argument("suite", choices=("identities", "formulas", "all"))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=12)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if getattr(args, "k_max", 0) < 0:
        print("error: --k-max must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
