"""Command-line front end.

    permreps [--json | --csv] [--budget N] chartable N [--check]
    permreps multiplicity FAMILY N [K] [--lam L] [--mu M] [--r R] [--verify-routes]
    permreps canonicalize FILE
    permreps verify SUITE N_MAX
    permreps asymptotics FAMILY [N] [K] [--n-range A:B] [-k K] [--r R] [--ratios]

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Output is deterministic: no timestamps, partitions always in descending
lexicographic order.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import factorial
from typing import Any, Optional, Sequence

from .asymptotics import render, report
from .binary import (
    NotAMemberError,
    canonicalize,
    detect_k,
    h_profile,
    membership_failure,
    parse_matrix_text,
    profile,
    t_map,
)
from .characters import character_table, dimension, inner_product, irreducible
from .colored import (
    ColoredPermutation,
    act_colored,
    canonicalize_signed,
    nontrivial_color_count,
    parse_colored_text,
    t_tilde,
    u_tilde,
)
from .combinatorics import Partition, Permutation, class_size, partitions_of
from .config import DEFAULT_LIMITS, SCHEMA_VERSION, Limits
from .multiplicities import (
    FAMILIES,
    RouteDisagreement,
    alpha_routes,
    beta_mult,
    beta_mult_H,
    family_size,
    gamma_route_beta_mult_H,
    multiplicity_table,
)
from .oracle import SUITES, run_suite

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad arguments or input file; reported with exit status 2."""

    def __init__(self, message: str, detail: Optional[dict] = None):
        super().__init__(message)
        self.detail = detail or {}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def exact(q) -> dict:
    q = Fraction(q)
    return {"exact": str(q), "decimal": render(q)}


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _n_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError("range must look like A:B")
    if not 1 <= a <= b:
        raise argparse.ArgumentTypeError("range needs 1 <= A <= B")
    return a, b


def document(command: str, parameters: dict, results: Any) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "parameters": parameters, "results": results}


# --- commands ---------------------------------------------------------------
# each returns (document, exit status, human text, csv rows or None)


def cmd_chartable(n: int, check: bool = False, limits: Limits = DEFAULT_LIMITS):
    if n < 1:
        raise UsageError("n must be positive")
    if n > limits.chartable_cap:
        raise UsageError(f"n={n} exceeds the character table cap {limits.chartable_cap}")
    parts = [str(p) for p in partitions_of(n)]
    table = [list(row) for row in character_table(n)]
    results = {"n": n, "partitions": parts, "classes": parts, "table": table}
    status = EXIT_OK
    if check:
        ok = orthogonality_holds(n)
        results["orthogonality"] = ok
        status = EXIT_OK if ok else EXIT_FAILURE
    width = max(len(p) for p in parts)
    cell = max(len(str(v)) for row in table for v in row) + 1
    lines = [" " * width + " |" + "".join(c.rjust(max(cell, len(c) + 1)) for c in parts)]
    for p, row in zip(parts, table):
        lines.append(p.rjust(width) + " |" + "".join(str(v).rjust(max(cell, len(c) + 1)) for v, c in zip(row, parts)))
    if check:
        lines.append(f"orthogonality: {'ok' if results['orthogonality'] else 'FAILED'}")
    rows = [["lambda", *parts]] + [[p, *row] for p, row in zip(parts, table)]
    return document("chartable", {"n": n, "check": check}, results), status, "\n".join(lines), rows


def orthogonality_holds(n: int) -> bool:
    parts = partitions_of(n)
    table = character_table(n)
    for a, lam in enumerate(parts):
        for b, mu in enumerate(parts):
            if inner_product(irreducible(lam), irreducible(mu)) != (lam == mu):
                return False
    # column orthogonality: sum_lam chi_lam(C) chi_lam(D) = delta_CD n! / |C|
    for c, mu in enumerate(parts):
        for d in range(len(parts)):
            total = sum(table[i][c] * table[i][d] for i in range(len(parts)))
            if total != (factorial(n) // class_size(mu) if c == d else 0):
                return False
    return all(table[i][-1] == dimension(lam) for i, lam in enumerate(parts))


def _check_family(family: str, n: int, k: Optional[int], r: Optional[int]) -> None:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if n < 1:
        raise UsageError("n must be positive")
    if family in ("H", "X", "Y") and (k is None or not 0 <= k <= n):
        raise UsageError(f"family {family} needs K with 0 <= K <= N")
    if family in ("Y", "Cr") and (r is None or r < 2):
        raise UsageError(f"family {family} needs --r R with R >= 2")


def cmd_multiplicity(
    family: str,
    n: int,
    k: Optional[int] = None,
    lam: Optional[Partition] = None,
    mu: Optional[Partition] = None,
    r: Optional[int] = None,
    verify_routes: bool = False,
    limits: Limits = DEFAULT_LIMITS,
):
    _check_family(family, n, k, r)
    for p in (lam, mu):
        if p is not None and p.n != n:
            raise UsageError(f"partition {p} is not a partition of {n}")
    if mu is not None and lam is None:
        raise UsageError("--mu needs --lam")
    params = {"family": family, "n": n, "k": k, "r": r, "verify_routes": verify_routes}
    status = EXIT_OK
    if lam is not None:
        params.update(lam=str(lam), mu=None if mu is None else str(mu))
        if mu is not None:
            routes = alpha_routes(family, lam, mu, k, r)
            value = next(iter(routes.values()))
            results = {"kind": "alpha", "lam": str(lam), "mu": str(mu), "multiplicity": value}
            text = f"m({lam}; {mu}) = {value}"
        else:
            value = beta_mult_H(lam, k) if family == "H" else beta_mult(lam, family, k, r)
            routes = {"class-sum": value}
            if family == "H":
                routes["kronecker"] = gamma_route_beta_mult_H(lam, k)
            results = {"kind": "beta", "lam": str(lam), "multiplicity": value}
            text = f"m({lam}; beta) = {value}"
        if verify_routes:
            agree = len(set(routes.values())) == 1
            results["routes"] = routes
            results["routes_agree"] = agree
            text += "\nroutes: " + ", ".join(f"{name}={v}" for name, v in routes.items())
            text += f"\nroutes agree: {str(agree).lower()}"
            status = EXIT_OK if agree else EXIT_FAILURE
        rows = [["lambda", "mu", "multiplicity"], [str(lam), "" if mu is None else str(mu), value]]
        return document("multiplicity", params, results), status, text, rows

    agree = None
    try:
        table = multiplicity_table(family, n, k, r)
        if verify_routes:
            for (a, b) in table.alpha:
                values = alpha_routes(family, a, b, k, r)
                if len(set(values.values())) != 1:
                    raise RouteDisagreement(f"m({a}; {b}): {values}")
                if values[next(iter(values))] != table.alpha[(a, b)]:
                    raise RouteDisagreement(f"m({a}; {b}) table value differs from routes {values}")
            if family == "H":
                for a in partitions_of(n):
                    if gamma_route_beta_mult_H(a, k) != table.beta[a]:
                        raise RouteDisagreement(f"beta multiplicity of {a}: Kronecker route differs")
            agree = True
    except RouteDisagreement as exc:
        results = {"kind": "table", "routes_agree": False, "disagreement": str(exc)}
        return document("multiplicity", params, results), EXIT_FAILURE, f"routes disagree: {exc}", None

    parts = partitions_of(n)
    names = [str(p) for p in parts]
    alpha = [[table.alpha[(a, b)] for b in parts] for a in parts]
    beta = [table.beta[a] for a in parts]
    results = {
        "kind": "table",
        "partitions": names,
        "alpha": alpha,
        "beta": beta,
        "dimension_sum": table.dimension_sum(),
        "beta_dimension_sum": table.beta_dimension_sum(),
        "family_size": family_size(family, n, k, r),
    }
    if verify_routes:
        results["routes_agree"] = agree
    width = max(len(s) for s in names)
    cell = max(width, max(len(str(v)) for row in alpha for v in row)) + 1
    lines = [f"alpha multiplicities, family {family}, n={n}" + ("" if k is None else f", k={k}")]
    lines.append(" " * width + " |" + "".join(s.rjust(cell) for s in names))
    for s, row in zip(names, alpha):
        lines.append(s.rjust(width) + " |" + "".join(str(v).rjust(cell) for v in row))
    lines.append("beta multiplicities: " + ", ".join(f"{s}: {v}" for s, v in zip(names, beta)))
    lines.append(f"sum m f^lam f^mu = {results['dimension_sum']} (family size {results['family_size']})")
    if verify_routes:
        lines.append("routes agree: true")
    rows = [["lambda", "mu", "alpha", "beta"]]
    for a, s in zip(parts, names):
        for b, t in zip(parts, names):
            rows.append([s, t, table.alpha[(a, b)], table.beta[a] if a == b else ""])
    return document("multiplicity", params, results), status, "\n".join(lines), rows


def cmd_canonicalize(path: str, text: Optional[str] = None):
    if text is None:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}")
    first = next((line.split() for line in text.splitlines() if line.strip()), [])
    params = {"file": path}
    try:
        if len(first) == 3:
            return _canonicalize_colored(params, *parse_colored_text(text))
        return _canonicalize_binary(params, *parse_matrix_text(text))
    except ValueError as exc:
        if isinstance(exc, NotAMemberError):
            raise
        raise UsageError(f"malformed matrix file: {exc}")


def _canonicalize_binary(params, a, k):
    n = a.n
    prof = profile(a)
    if k is None:
        k = detect_k(a)
        if k is None:
            reasons = {str(j): membership_failure(a, j) for j in range(n + 1)}
            raise UsageError(
                f"matrix (row profile {prof.eta}, column profile {prof.theta}) is in no H_{n}^k",
                {"error": "not-a-member", "family": "H", "n": n, "k": None,
                 "row_profile": str(prof.eta), "column_profile": str(prof.theta), "reasons": reasons},
            )
        k_source = "detected"
    else:
        k_source = "header"
        reason = membership_failure(a, k)
        if reason is not None:
            eta, theta = h_profile(n, k) if 0 <= k <= n else (None, None)
            raise UsageError(
                f"not in H_{n}^{k}: {reason}",
                {"error": "not-a-member", "family": "H", "n": n, "k": k,
                 "row_profile": str(prof.eta), "column_profile": str(prof.theta),
                 "expected_row_profile": None if eta is None else str(eta),
                 "expected_column_profile": None if theta is None else str(theta),
                 "reasons": {str(k): reason}},
            )
    f = canonicalize(a, k)
    image = t_map(a, k)
    signed = t_tilde(a, k)
    results = {
        "family": "H",
        "n": n,
        "k": k,
        "k_source": k_source,
        "pi": str(f.pi),
        "sigma": str(f.sigma),
        "reconstruction_ok": f.reconstruct() == a,
        "t_map": str(image),
        "t_tilde": {"perm": str(signed.perm), "colors": list(signed.colors)},
    }
    text = "\n".join([
        f"H_{n}^{k} member (k {k_source})",
        f"pi    = {f.pi}",
        f"sigma = {f.sigma}",
        f"reconstruction: {'ok' if results['reconstruction_ok'] else 'FAILED'}",
        f"T(A)  = {image}",
        f"T~(A) = {signed.perm} | {' '.join(map(str, signed.colors))}",
    ])
    status = EXIT_OK if results["reconstruction_ok"] else EXIT_FAILURE
    return document("canonicalize", params, results), status, text, None


def _canonicalize_colored(params, a: ColoredPermutation, k):
    n = a.n
    found = nontrivial_color_count(a)
    if a.r != 2:
        raise UsageError(
            "canonical factorization is only defined for signed permutations (r = 2)",
            {"error": "unsupported-modulus", "family": "Y", "n": n, "k": k, "r": a.r},
        )
    if found != k:
        raise UsageError(
            f"not in X_{n}^{k}: found {found} minus signs",
            {"error": "not-a-member", "family": "X", "n": n, "k": k, "minus_signs": found,
             "reasons": {str(k): f"expected {k} minus signs, found {found}"}},
        )
    pi, sigma = canonicalize_signed(a, k)
    ok = act_colored(pi, sigma.inverse(), u_tilde(n, k)) == a
    results = {
        "family": "X",
        "n": n,
        "k": k,
        "k_source": "header",
        "pi": str(pi),
        "sigma": str(sigma),
        "reconstruction_ok": ok,
        "projection": str(a.perm),
    }
    text = "\n".join([
        f"X_{n}^{k} member",
        f"pi    = {pi}",
        f"sigma = {sigma}",
        f"reconstruction: {'ok' if ok else 'FAILED'}",
        f"p(A)  = {a.perm}",
    ])
    return document("canonicalize", params, results), EXIT_OK if ok else EXIT_FAILURE, text, None


def cmd_verify(suite: str, n_max: int, limits: Limits = DEFAULT_LIMITS):
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if n_max < 1:
        raise UsageError("N_MAX must be positive")
    if suite != "identities":
        largest = factorial(n_max) * factorial(n_max)
        if n_max > limits.oracle_cap or largest > limits.orbit_budget:
            raise UsageError(
                f"suite {suite} at n_max={n_max} enumerates {largest} matrices; "
                f"limits are n <= {limits.oracle_cap} and budget {limits.orbit_budget}"
            )
    result = run_suite(suite, n_max)
    failures = [
        {"check": d, "expected": _jsonable(e), "actual": _jsonable(a)} for d, e, a in result.failures
    ]
    results = {"suite": suite, "n_max": n_max, "checks_run": result.checks_run, "passed": result.passed,
               "failures": failures}
    lines = [f"suite {suite}, n_max={n_max}: {result.checks_run} checks, {len(failures)} failures"]
    lines += [f"  FAIL {f['check']}: expected {f['expected']}, got {f['actual']}" for f in failures]
    lines.append("PASS" if result.passed else "FAIL")
    rows = [["suite", "n_max", "checks_run", "failures"], [suite, n_max, result.checks_run, len(failures)]]
    status = EXIT_OK if result.passed else EXIT_FAILURE
    return document("verify", {"suite": suite, "n_max": n_max}, results), status, "\n".join(lines), rows


def _jsonable(value):
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    if isinstance(value, (Partition, Permutation)):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


ASYMPTOTIC_COLUMNS = ("n", "k", "sum_inverse_class_sizes", "f_k", "norm_ratio_sq", "cosine_sq", "lower_bound")


def _report_payload(rep, with_ratios: bool) -> dict:
    out = {
        "n": rep.n,
        "k": rep.k,
        "sum_inverse_class_sizes": exact(rep.sum_inverse_class_sizes),
        "f_k": exact(rep.f_k),
        "norm_ratio_sq": exact(rep.norm_ratio_sq),
        "cosine_sq": exact(rep.cosine_sq),
        "lower_bound": exact(rep.lower_bound),
        "bounds_hold": rep.bounds_hold,
    }
    if with_ratios:
        out["ratios"] = [
            {"lam": str(lam), "ratio": exact(q), "balance": exact(b)}
            for lam, (q, b) in rep.per_lambda_ratios.items()
        ]
    return out


def cmd_asymptotics(
    family: str,
    n: Optional[int] = None,
    k: Optional[int] = None,
    n_range: Optional[tuple[int, int]] = None,
    r: Optional[int] = None,
    ratios: bool = False,
):
    if (n is None) == (n_range is None):
        raise UsageError("give exactly one of N or --n-range A:B")
    ns = [n] if n_range is None else list(range(n_range[0], n_range[1] + 1))
    for m in ns:
        _check_family(family, m, k, r)
    params = {"family": family, "n": n, "k": k, "n_range": None if n_range is None else list(n_range),
              "r": r, "ratios": ratios}
    reports = [report(family, m, k, r, with_ratios=ratios) for m in ns]
    payloads = [_report_payload(rep, ratios) for rep in reports]
    results = {"family": family, "series": payloads}
    lines = ["  ".join(f"{c:>24}" if i > 1 else f"{c:>3}" for i, c in enumerate(ASYMPTOTIC_COLUMNS))]
    for p in payloads:
        cells = [f"{p['n']:>3}", f"{'' if p['k'] is None else p['k']:>3}"]
        cells += [f"{p[c]['decimal']:>24}" for c in ASYMPTOTIC_COLUMNS[2:]]
        lines.append("  ".join(cells))
    if n_range is None:
        p = payloads[0]
        lines.append("")
        lines += [f"{c} = {p[c]['exact']}" for c in ASYMPTOTIC_COLUMNS[2:]]
        if ratios:
            lines.append("m(lam, beta) / (scale f^lam), with max(lam_1, lam'_1)/n:")
            lines += [f"  {q['lam']:>12}  {q['ratio']['decimal']:>10}  {q['balance']['decimal']}" for q in p["ratios"]]
    header = ["n", "k"]
    for c in ASYMPTOTIC_COLUMNS[2:]:
        header += [c, f"{c}_exact"]
    rows = [header]
    for p in payloads:
        row = [p["n"], "" if p["k"] is None else p["k"]]
        for c in ASYMPTOTIC_COLUMNS[2:]:
            row += [p[c]["decimal"], p[c]["exact"]]
        rows.append(row)
    return document("asymptotics", params, results), EXIT_OK, "\n".join(lines), rows


# --- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_const", const="json", dest="format", default=argparse.SUPPRESS,
                     help="emit a JSON document")
    fmt.add_argument("--csv", action="store_const", const="csv", dest="format", default=argparse.SUPPRESS,
                     help="emit CSV rows")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, metavar="N",
                        help="maximum number of states an enumeration may visit")

    parser = _Parser(prog="permreps", description="Permutation representations on matrix orbits.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chartable", parents=[common], help="character table of S_n")
    p.add_argument("n", type=int)
    p.add_argument("--check", action="store_true", help="also verify the orthogonality relations")

    p = sub.add_parser("multiplicity", parents=[common], help="irreducible multiplicities")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("--lam", type=_partition)
    p.add_argument("--mu", type=_partition)
    p.add_argument("--r", type=int)
    p.add_argument("--verify-routes", action="store_true")

    p = sub.add_parser("canonicalize", parents=[common], help="factor a matrix file as pi U sigma")
    p.add_argument("file")

    p = sub.add_parser("verify", parents=[common], help="run a brute-force verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("n_max", type=int)

    p = sub.add_parser("asymptotics", parents=[common], help="norms, angles and ratios")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("k_pos", type=int, nargs="?", metavar="k")
    p.add_argument("-k", type=int, dest="k_opt")
    p.add_argument("--n-range", type=_n_range)
    p.add_argument("--r", type=int)
    p.add_argument("--ratios", action="store_true")
    return parser


def dispatch(args, limits: Limits):
    if args.command == "chartable":
        return cmd_chartable(args.n, args.check, limits)
    if args.command == "multiplicity":
        return cmd_multiplicity(args.family, args.n, args.k, args.lam, args.mu, args.r, args.verify_routes, limits)
    if args.command == "canonicalize":
        return cmd_canonicalize(args.file)
    if args.command == "verify":
        return cmd_verify(args.suite, args.n_max, limits)
    if args.command == "asymptotics":
        if args.k_pos is not None and args.k_opt is not None and args.k_pos != args.k_opt:
            raise UsageError("K given twice with different values")
        k = args.k_pos if args.k_pos is not None else args.k_opt
        return cmd_asymptotics(args.family, args.n, k, args.n_range, args.r, args.ratios)
    raise UsageError(f"unknown command {args.command}")


def render_csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    fmt = "text"
    command = None
    params: dict = {}
    try:
        args = build_parser().parse_args(argv)
        fmt = getattr(args, "format", "text")
        command = args.command
        params = {
            k: _jsonable(v) for k, v in sorted(vars(args).items()) if k not in ("format", "budget", "command")
        }
        limits = DEFAULT_LIMITS.with_budget(getattr(args, "budget", None))
        doc, status, text, rows = dispatch(args, limits)
    except (UsageError, ValueError) as exc:
        detail = getattr(exc, "detail", None) or {"error": "usage"}
        if fmt == "json" and command is not None:
            doc = document(command, params, {"error": {**detail, "message": str(exc)}})
            stdout.write(json.dumps(doc, indent=2) + "\n")
        print(f"permreps: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    if fmt == "json":
        stdout.write(json.dumps(doc, indent=2) + "\n")
    elif fmt == "csv":
        if rows is None:
            print("permreps: error: this command has no CSV form; use --json", file=stderr)
            return EXIT_USAGE
        stdout.write(render_csv(rows))
    else:
        stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
