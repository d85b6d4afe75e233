"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 internal invariant
violation, 5 theorem violation found by ``verify``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import brundan, characters
from .errors import InternalError, NonDistinct, NonDominant, NonExactDivision, TheoremViolation
from .laurent import LaurentPoly, format_poly
from .weights import ell, enumerate_dominant_box

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_INTERNAL, EXIT_THEOREM = 0, 2, 3, 4, 5

_INT = re.compile(r"[+-]?\d+")


class ParseError(ValueError):
    pass


def parse_weight(text: str) -> tuple[int, ...]:
    """Parse ``"c1,c2,...,cn"``; only surrounding whitespace is tolerated."""
    tokens = text.strip().split(",")
    if not tokens or not all(_INT.fullmatch(t) for t in tokens):
        raise ParseError(f"bad weight {text!r}: expected comma-separated integers")
    return tuple(int(t) for t in tokens)


def _terms(poly: LaurentPoly) -> list[dict]:
    return [{"exps": list(e), "coeff": str(c)} for e, c in poly.sorted_terms()]


def _expansion(exp: dict) -> list[dict]:
    return [{"weight": list(w), "coeff": str(c)} for w, c in sorted(exp.items(), reverse=True)]


def new_report(command: str, weight: Sequence[int] | None = None) -> dict:
    return {
        "command": command,
        "rank": len(weight) if weight is not None else None,
        "weight": list(weight) if weight is not None else None,
        "terms": [],
        "expansion": [],
        "trivial_mult": None,
        "sch": None,
        "verdict": "pass",
    }


def _fmt_weight(w: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(report)
    return _render_plain(report)


def _render_plain(report: dict) -> str:
    lines = []
    if report["command"] == "verify":
        for r in report["results"]:
            lines.append(
                f"{_fmt_weight(r['weight'])} ell={r['ell']} p={r['p']} "
                f"trivial_mult={r['trivial_mult']} sch={r['sch']}"
            )
        lines.append(f"checked {len(report['results'])} weights: {report['verdict']}")
        if report.get("offending") is not None:
            lines.append(f"offending weight: {_fmt_weight(report['offending'])}")
        return "\n".join(lines) + "\n"
    if report["terms"]:
        poly = LaurentPoly(report["rank"], {tuple(t["exps"]): int(t["coeff"]) for t in report["terms"]})
        lines.append(format_poly(poly))
    elif report["command"] in ("schur", "schurp", "euler", "irr"):
        lines.append("0")
    for t in report["expansion"]:
        lines.append(f"s{_fmt_weight(t['weight'])}: {t['coeff']}")
    if report["trivial_mult"] is not None:
        lines.append(f"trivial_mult={report['trivial_mult']}")
    if report["sch"] is not None:
        lines.append(f"sch={report['sch']}")
    return "\n".join(lines) + "\n"


def _render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=";", lineterminator="\n")
    if report["command"] == "verify":
        writer.writerow(["weight", "ell", "p", "trivial_mult", "sch"])
        for r in report["results"]:
            writer.writerow(
                [" ".join(str(x) for x in r["weight"]), r["ell"], r["p"], r["trivial_mult"], r["sch"]]
            )
    elif report["expansion"]:
        writer.writerow(["weight", "coeff"])
        for t in report["expansion"]:
            writer.writerow([" ".join(str(x) for x in t["weight"]), t["coeff"]])
    elif report["terms"]:
        writer.writerow(["exps", "coeff"])
        for t in report["terms"]:
            writer.writerow([" ".join(str(x) for x in t["exps"]), t["coeff"]])
    else:
        writer.writerow(["trivial_mult", "sch"])
        writer.writerow([report["trivial_mult"], report["sch"]])
    return buf.getvalue()


_POLY_COMMANDS = {
    "schur": characters.schur,
    "schurp": characters.schur_p,
    "euler": characters.euler_char,
    "irr": brundan.irreducible_character,
}


def cmd_poly(command: str, weight: tuple[int, ...]) -> dict:
    report = new_report(command, weight)
    report["terms"] = _terms(_POLY_COMMANDS[command](weight))
    return report


def cmd_branch(weight: tuple[int, ...]) -> dict:
    report = new_report("branch", weight)
    exp = brundan.branching(weight)
    report["expansion"] = _expansion(exp)
    report["trivial_mult"] = str(exp.get((0,) * len(weight), 0))
    return report


def cmd_verma(weight: tuple[int, ...]) -> dict:
    report = new_report("verma", weight)
    report["trivial_mult"] = str(characters.verma_trivial_multiplicity(weight))
    report["sch"] = str(characters.sch_verma(weight))
    return report


def verify_one(weight: tuple[int, ...]) -> dict:
    """Sweep record for one weight; a theorem violation is recorded, not raised."""
    row = {
        "weight": list(weight),
        "ell": ell(weight),
        "p": brundan.pairing(weight).p,
        "trivial_mult": str(brundan.trivial_multiplicity(weight)),
    }
    try:
        row["sch"] = str(brundan.supercharacter_verdict(weight))
        row["ok"] = row["trivial_mult"] == row["sch"] == ("0" if any(weight) else "1")
    except TheoremViolation:
        row["sch"] = "violation"
        row["ok"] = False
    return row


def cmd_verify(n: int, bound: int, sumbound: int, jobs: int = 1) -> dict:
    if n < 1 or bound < 0 or sumbound < 0:
        raise NonDominant("rank must be positive and bounds non-negative")
    report = new_report("verify")
    report.update(rank=n, bound=bound, sumbound=sumbound, offending=None)
    weights = enumerate_dominant_box(n, bound, sumbound)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(verify_one, weights, chunksize=4))
    else:
        rows = [verify_one(w) for w in weights]
    for row in rows:
        if not row.pop("ok") and report["offending"] is None:
            report["offending"] = row["weight"]
    report["results"] = rows
    report["verdict"] = "pass" if report["offending"] is None else "fail"
    return report


def _fix_negative_weight_args(argv: list[str]) -> list[str]:
    # argparse would read "-1,0" after -w as an option flag
    out, it = [], iter(argv)
    for tok in it:
        if tok in ("-w", "--weight"):
            val = next(it, None)
            out.append("--weight" if val is None else f"--weight={val}")
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="queerchar", description="Characters and branching for q(n)-modules."
    )
    parser.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="plain", choices=("json", "plain", "csv")):
        p.add_argument("--format", choices=choices, default=default)

    for name, helptext in [
        ("schur", "Schur Laurent polynomial s_mu"),
        ("schurp", "Schur P-Laurent polynomial P_lambda"),
        ("euler", "character of the Euler characteristic E(lambda)"),
        ("irr", "character of the irreducible L(lambda)"),
        ("branch", "gl(n)-branching multiplicities of L(lambda)"),
        ("verma", "trivial gl(n)-multiplicity and supercharacter of a Verma module"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("-w", "--weight", required=True)
        add_format(p)

    p = sub.add_parser("verify", help="sweep dominant weights and check sch L = 0")
    p.add_argument("-n", "--rank", type=int, required=True)
    p.add_argument("-b", "--bound", type=int, required=True)
    p.add_argument("-s", "--sumbound", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p, default="csv")
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = _fix_negative_weight_args(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK

    start = time.perf_counter()
    try:
        if args.command == "verify":
            report = cmd_verify(args.rank, args.bound, args.sumbound, args.jobs)
        else:
            weight = parse_weight(args.weight)
            if args.command == "branch":
                report = cmd_branch(weight)
            elif args.command == "verma":
                report = cmd_verma(weight)
            else:
                report = cmd_poly(args.command, weight)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NonDominant, NonDistinct) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (InternalError, NonExactDivision) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    out.write(render(report, args.format))
    if args.timing:
        print(f"elapsed: {time.perf_counter() - start:.3f} s", file=sys.stderr)
    if report["verdict"] == "fail":
        print(f"theorem violation at weight {_fmt_weight(report['offending'])}", file=sys.stderr)
        return EXIT_THEOREM
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
