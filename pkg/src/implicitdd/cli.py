"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 internal disagreement between methods.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import asym, dissect, implicit, seq, terms
from .numcore import format_rational, to_rational

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class UsageError(Exception):
    pass


class InvariantFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit_rows(header, rows, fmt) -> str:
    if fmt == "csv":
        lines = [",".join(header)] + [",".join(str(v) for v in r) for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows]) + "\n"
    widths = [max(len(str(v)) for v in col) for col in zip(header, *rows)]
    lines = [" ".join(str(v).rjust(w) for v, w in zip(r, widths)) for r in [header, *rows]]
    return "\n".join(lines) + "\n"


def _cmd_seq(args) -> tuple[str, int]:
    if args.n_max < 0:
        raise ValueError("--n-max must be >= 0")
    if args.method != "all":
        values = seq.METHODS[args.method](args.n_max)
        if args.format == "json":
            return json.dumps(values) + "\n", EXIT_OK
        if args.format == "csv":
            return "n,a_n\n" + "".join(f"{n},{v}\n" for n, v in enumerate(values)), EXIT_OK
        return "".join(f"{v}\n" for v in values), EXIT_OK

    names = ["quad", "lin", "gf", "hyp", "binom"]
    columns = [seq.METHODS[m](args.n_max) for m in names]
    rows, all_agree = [], True
    for n in range(args.n_max + 1):
        vals = [col[n] for col in columns]
        agree = len(set(vals)) == 1
        all_agree &= agree
        rows.append([n, *vals, str(agree).lower()])
    out = _emit_rows(["n", *names, "agree"], rows, args.format)
    return out, EXIT_OK if all_agree else EXIT_INVARIANT


def _cmd_dissect(args) -> tuple[str, int]:
    if args.n < 2:
        raise ValueError("--n must be >= 2")
    if args.count_only:
        count = dissect.count_dissections(args.n)
        if count != dissect.count_dissections_closed_form(args.n):
            raise InvariantFailure("dynamic-programming count disagrees with closed form")
        return f"{count}\n", EXIT_OK
    ds = dissect.enumerate_dissections(args.n)
    if args.format == "json":
        return dissect.dissections_to_json(ds) + "\n", EXIT_OK
    return "".join(d.to_json() + "\n" for d in ds), EXIT_OK


def _cmd_terms(args) -> tuple[str, int]:
    if args.n < 2:
        raise ValueError("--n must be >= 2")
    if args.method == "enum":
        count = terms.count_terms_by_enumeration(args.n)
    else:
        count = terms.count_terms_dp(args.n)
    return f"{count}\n", EXIT_OK


def _parse_points(text: str):
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) < 2:
        raise ValueError("--points needs at least two abscissas")
    return [to_rational(p) for p in parts]


def _cmd_implicit(args) -> tuple[str, int]:
    try:
        text = Path(args.relation).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read relation file: {exc}") from None
    try:
        relation = implicit.ImplicitRelation.from_json(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"relation file is not valid JSON: {exc}") from None
    problem = implicit.make_problem(relation, _parse_points(args.points))
    names = ["direct", "rec", "explicit"] if args.method == "all" else [args.method]
    if "explicit" in names and problem.n < 2:
        if args.method == "explicit":
            raise ValueError("the dissection formula needs at least three points")
        names.remove("explicit")
    results = {m: implicit.METHODS[m](problem) for m in names}
    code = EXIT_OK
    if len(set(results.values())) > 1:
        code = EXIT_INVARIANT
    if args.format == "json":
        payload = {m: format_rational(v) for m, v in results.items()}
        if args.method == "all":
            payload["agree"] = code == EXIT_OK
        return json.dumps(payload) + "\n", code
    if args.method != "all":
        return format_rational(results[args.method]) + "\n", code
    rows = [[m, format_rational(v)] for m, v in results.items()]
    rows.append(["agree", str(code == EXIT_OK).lower()])
    return _emit_rows(["method", "value"], rows, args.format), code


def _cmd_asym(args) -> tuple[str, int]:
    if args.n_max < 2:
        raise ValueError("--n-max must be >= 2")
    if args.digits < 10:
        raise ValueError("--digits must be >= 10")
    report = asym.relative_error_table(args.n_max, args.stride, max(args.digits, asym.DEFAULT_DIGITS))
    return report.to_csv(significant_digits=args.digits), EXIT_OK


def _cmd_table1(args) -> tuple[str, int]:
    n_max = len(seq.TABLE1) - 1
    producers = [seq.a_quadratic, seq.a_linear, seq.a_gf, seq.a_hypergeometric, seq.a_binomial_transform]
    values = seq.a_linear(n_max)
    if any(p(n_max) != values for p in producers):
        raise InvariantFailure("characterizations of a_n disagree")
    if args.format == "csv":
        return "n,a_n\n" + "".join(f"{n},{v}\n" for n, v in enumerate(values)), EXIT_OK
    if args.format == "json":
        return json.dumps(values) + "\n", EXIT_OK
    return (
        "n: " + " ".join(str(n) for n in range(n_max + 1)) + "\n"
        "a_n: " + " ".join(str(v) for v in values) + "\n"
    ), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    parser = _Parser(prog="implicitdd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("seq", parents=[common], help="prefix of the term-count sequence a_n")
    p.add_argument("name", choices=["a"])
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--method", choices=[*seq.METHODS, "all"], default="lin")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("dissect", parents=[common], help="dissections of the polygon 0..N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_dissect)

    p = sub.add_parser("terms", parents=[common], help="number of terms in the dissection formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["enum", "dp"], default="enum")
    p.set_defaults(func=_cmd_terms)

    p = sub.add_parser("implicit", parents=[common], help="divided difference of an implicit function")
    p.add_argument("--relation", required=True, help="JSON file with a_num, b_num[, a_den, b_den]")
    p.add_argument("--points", required=True, help="comma-separated rationals, e.g. 0,1/2,3")
    p.add_argument("--method", choices=[*implicit.METHODS, "all"], default="all")
    p.set_defaults(func=_cmd_implicit)

    p = sub.add_parser("asym", parents=[common], help="relative error of the asymptotic estimate (CSV)")
    p.add_argument("--n-max", type=int, default=1000)
    p.add_argument("--stride", type=int, default=None)
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=_cmd_asym)

    p = sub.add_parser("table1", parents=[common], help="a_0..a_11 cross-checked")
    p.set_defaults(func=_cmd_table1)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out, code = args.func(args)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_INPUT
    except InvariantFailure as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVARIANT
    except (ValueError, ZeroDivisionError, TypeError, IndexError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    if args.output:
        Path(args.output).write_text(out)
    else:
        stdout.write(out)
    if code == EXIT_INVARIANT:
        print("error: methods disagree", file=stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
