"""Command-line surface: counting, enumeration, verification, tables, audits.

Output is deterministic for a fixed argv: rows are emitted in sorted order,
reals are printed with 12 significant digits in CSV mode, and JSON mode
mirrors the CSV rows as an array of objects with the same field names.

Exit codes: 0 on success, 1 when a verification or dual-source cross-check
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import counting as ct
from . import enumeration as en
from . import geometry as geo
from . import verify as vf
from .binwords import BinaryWord

__all__ = ["main"]

_ORACLE_MAX_DEFAULT = 16
_ENUMERATION_HARD_CAP = 30


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _emit_rows(rows: list[dict], fields: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([{k: row[k] for k in fields} for row in rows], indent=2))
        return
    print(",".join(fields))
    for row in rows:
        print(",".join(_fmt(row[k]) for k in fields))


def _parse_syllables(text: str) -> BinaryWord:
    """Convert an alternating-syllable string like 'abaB' (B inverse of b)."""
    chars = [c for c in text if not c.isspace()]
    if len(chars) % 2 or not chars:
        raise ValueError(f"syllable string must pair each 'a' with 'b' or 'B': {text!r}")
    entries = []
    for i in range(0, len(chars), 2):
        if chars[i] != "a" or chars[i + 1] not in "bB":
            raise ValueError(f"bad syllable {''.join(chars[i:i+2])!r} in {text!r}")
        entries.append(1 if chars[i + 1] == "b" else -1)
    return BinaryWord.from_entries(entries)


def _word_from_args(args, parser) -> BinaryWord:
    try:
        if args.syllables is not None:
            return _parse_syllables(args.syllables)
        return BinaryWord.from_text(args.word)
    except ValueError as exc:
        parser.error(str(exc))


# ---------------------------------------------------------------------------
# count

def _count_value(family: str, t: int, m, cumulative: bool, primitive: bool) -> int:
    if family == "classes+torsion":
        if not cumulative:
            raise ValueError("classes+torsion only makes sense cumulatively")
        return ct.cumulative("classes", t, include_torsion=True)
    if family in ("classes", "primitive"):
        primitive = primitive or family == "primitive"
        if cumulative:
            return ct.cumulative("classes", t, primitive=primitive)
        return ct.primitive_class_count(t) if primitive else ct.necklace_count(t)
    if family in ("reciprocal", "reciprocal-primitive"):
        primitive = primitive or family == "reciprocal-primitive"
        if cumulative:
            return ct.cumulative("reciprocal", t, primitive=primitive)
        return ct.reciprocal_count(t, primitive=primitive)
    if family == "lowlying":
        if m is None:
            raise ValueError("family 'lowlying' needs --m")
        if t > _ENUMERATION_HARD_CAP:
            raise ValueError(f"lowlying counts are enumerated; --t above {_ENUMERATION_HARD_CAP} is out of range")
        lengths = range(1, t + 1) if cumulative else (t,)
        return sum(
            sum(1 for _ in en.classes(tau, m=m, primitive=primitive))
            for tau in lengths
        )
    if family in ("lowlying-reciprocal", "compositions"):
        if family == "compositions" and m is None:
            # unbounded parts
            if cumulative:
                return sum(1 << (n - 1) for n in range(1, t + 1))
            return 1 << (t - 1)
        if m is None:
            raise ValueError(f"family {family!r} needs --m")
        if primitive:
            raise ValueError(f"--primitive is not defined for family {family!r}")
        if cumulative:
            return ct.cumulative(family, t, m=m)
        return ct.bounded_compositions(t, m)
    raise ValueError(f"unknown family {family!r}")


def cmd_count(args, parser) -> int:
    try:
        value = _count_value(args.family, args.t, args.m, args.cumulative, args.primitive)
    except ValueError as exc:
        parser.error(str(exc))
    if args.format == "json":
        record = {
            "family": args.family,
            "t": args.t,
            "m": args.m,
            "cumulative": args.cumulative,
            "primitive": args.primitive,
            "exact": value,
        }
        print(json.dumps(record, indent=2))
    else:
        print(value)
    return 0


# ---------------------------------------------------------------------------
# enumerate

def cmd_enumerate(args, parser) -> int:
    if args.t > _ENUMERATION_HARD_CAP:
        parser.error(f"--t above {_ENUMERATION_HARD_CAP} is out of range for enumeration")
    if args.family == "classes":
        rows = [
            {"word": str(w), "tau": args.t}
            for w in en.classes(
                args.t, primitive=args.primitive, m=args.m, hyperbolic=args.hyperbolic
            )
        ]
        _emit_rows(rows, ["word", "tau"], args.format)
        return 0
    if args.family == "reciprocal":
        rows = [
            {"word": str(h.word), "t": args.t, "k0": h.k0}
            for h in en.reciprocal_classes(args.t, args.m, primitive=args.primitive)
        ]
        _emit_rows(rows, ["word", "t", "k0"], args.format)
        return 0
    parser.error(f"unknown family {args.family!r} for enumeration")


# ---------------------------------------------------------------------------
# alpha

def cmd_alpha(args, parser) -> int:
    try:
        data = ct.alpha(args.m, args.tol)
    except ValueError as exc:
        parser.error(str(exc))
    row = {
        "m": data.m,
        "alpha": f"{data.alpha:.15g}",
        "d": f"{data.d:.15g}",
        "residual": f"{data.residual:.6g}",
    }
    if args.format == "json":
        print(json.dumps(row, indent=2))
    else:
        print(",".join(row.keys()))
        print(",".join(str(v) for v in row.values()))
    return 0


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args, parser) -> int:
    try:
        results = vf.run_suite(args.suite, tmax=args.tmax, threads=args.threads)
    except ValueError as exc:
        parser.error(str(exc))
    failed = 0
    for r in results:
        if r.ok:
            print(f"PASS {r.name}" + (f" ({r.detail})" if r.detail else ""))
        else:
            failed += 1
            print(f"FAIL {r.name}: {r.detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# growth

def _growth_exact(item: int, t: int, m, oracle_max: int):
    if item == 1:
        return (1 << (t // 2)) - 1
    if item == 2:
        half = t // 2
        return ct.cumulative("lowlying-reciprocal", half, m=m) if half else 0
    if item == 3:
        return ct.cumulative("classes", t, primitive=True) - 2
    # item 4: enumerate while the oracle reaches, use the bound formula beyond
    total: float | int = 0
    for tau in range(1, t + 1):
        if tau <= oracle_max:
            total += sum(
                1 for _ in en.classes(tau, primitive=True, m=m, hyperbolic=True)
            )
        else:
            total += ct.lowlying_lower_bound(tau, m)
    return total


def cmd_growth(args, parser) -> int:
    if args.item in (2, 4) and args.m is None:
        parser.error(f"growth item {args.item} needs --m")
    try:
        rows = []
        for t in range(1, args.tmax + 1):
            exact = _growth_exact(args.item, t, args.m, args.oracle_max)
            target = ct.growth_target(args.item, t, args.m)
            rows.append(
                {
                    "t": t,
                    "exact": exact,
                    "target": target,
                    "ratio": exact / target if target else 0.0,
                }
            )
    except ValueError as exc:
        parser.error(str(exc))
    _emit_rows(rows, ["t", "exact", "target", "ratio"], args.format)
    return 0


# ---------------------------------------------------------------------------
# table1

def cmd_table1(args, parser) -> int:
    t, m = args.t, args.m
    if t < 1 or m < 2:
        parser.error("table1 needs --t >= 1 and --m >= 2")
    enumerable = t <= args.oracle_max

    def enum_count(gen):
        return sum(1 for _ in gen) if enumerable else ""

    classes_n = enum_count(en.classes(t))
    reciprocal_n = enum_count(en.reciprocal_classes(t))
    lowlying_n = enum_count(en.classes(t, m=m))
    lowlying_rec_n = enum_count(en.reciprocal_classes(t, m))

    bound = ct.lowlying_lower_bound(t, m)
    rows = [
        {
            "family": "classes",
            "word_length": 2 * t,
            "formula": ct.necklace_count(t),
            "enumerated": classes_n,
            "check": "",
        },
        {
            "family": "reciprocal",
            "word_length": 4 * t,
            "formula": ct.reciprocal_count(t),
            "enumerated": reciprocal_n,
            "check": "",
        },
        {
            "family": "lowlying",
            "word_length": 2 * t,
            "formula": bound,
            "enumerated": lowlying_n,
            "check": "",
        },
        {
            "family": "lowlying-reciprocal",
            "word_length": 4 * t,
            "formula": ct.closed_form_compositions(t, m),
            "enumerated": lowlying_rec_n,
            "check": "",
        },
    ]
    failed = 0
    for row in rows:
        if not enumerable:
            row["check"] = "skipped"
            continue
        if row["family"] == "lowlying":
            good = row["enumerated"] >= row["formula"]
            row["check"] = "bound-ok" if good else "BOUND-FAIL"
        else:
            good = row["enumerated"] == row["formula"]
            row["check"] = "equal" if good else "MISMATCH"
        failed += not good
    _emit_rows(rows, ["family", "word_length", "formula", "enumerated", "check"], args.format)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# depth and the bracket audit

_DEPTH_FIELDS = [
    "word",
    "tau",
    "max_run",
    "trace_abs",
    "length",
    "apex",
    "depth",
    "winding_lo",
    "winding_hi",
    "cross_check_ok",
]


def cmd_depth(args, parser) -> int:
    w = _word_from_args(args, parser)
    try:
        report = geo.max_depth(w)
    except ValueError as exc:
        parser.error(str(exc))
    row = {
        "word": str(report.word),
        "tau": report.word.length,
        "max_run": report.max_run,
        "trace_abs": report.trace_abs,
        "length": report.geo_length,
        "apex": report.apex,
        "depth": report.depth,
        "winding_lo": report.winding_bracket[0],
        "winding_hi": report.winding_bracket[1],
        "cross_check_ok": bool(report.cross_check_ok),
    }
    _emit_rows([row], _DEPTH_FIELDS, args.format)
    return 0


_AUDIT_FIELDS = [
    "word",
    "tau",
    "max_run",
    "trace_abs",
    "length",
    "apex",
    "depth",
    "paper_bracket_hit",
    "shifted_bracket_hit",
]


def cmd_audit(args, parser) -> int:
    if args.tmax < 2:
        parser.error("--tmax must be >= 2")
    report = geo.audit_lemma71(args.tmax, threads=args.threads)
    rows = [{k: getattr(r, k) for k in _AUDIT_FIELDS} for r in report.rows]
    if args.format == "json":
        print(json.dumps({"rows": rows, "summary": report.summary}, indent=2))
        return 0
    _emit_rows(rows, _AUDIT_FIELDS, args.format)
    for key in (
        "classes",
        "paper_bracket_hits",
        "shifted_bracket_hits",
        "widened_hits",
        "boundary_flags",
        "cross_check_failures",
    ):
        print(f"# {key}: {report.summary[key]}")
    for k, hist in report.summary["by_max_run"].items():
        print(
            f"# max_run {k}: paper {hist['paper']}, shifted {hist['shifted']}, "
            f"neither {hist['neither']}"
        )
    return 0


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modgeod",
        description=(
            "Exact counting and enumeration of cyclic sign-word classes "
            "(closed geodesics on the modular orbifold), their reciprocal and "
            "bounded-run subfamilies, and the matching growth laws."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("count", help="exact count of one family at one length")
    p.add_argument(
        "--family",
        required=True,
        choices=(
            "classes",
            "classes+torsion",
            "primitive",
            "reciprocal",
            "reciprocal-primitive",
            "lowlying",
            "lowlying-reciprocal",
            "compositions",
        ),
    )
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--cumulative", action="store_true")
    p.add_argument("--primitive", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list canonical class representatives")
    p.add_argument("--family", required=True, choices=("classes", "reciprocal"))
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--primitive", action="store_true")
    p.add_argument("--hyperbolic", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("alpha", help="growth root and coefficient for a run bound")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-13)
    add_format(p)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--suite", default="all", choices=(*vf.SUITES, "all"))
    p.add_argument("--tmax", type=int)
    p.add_argument("--threads", type=int, default=os.cpu_count())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("growth", help="exact vs target growth table")
    p.add_argument("--item", type=int, required=True, choices=(1, 2, 3, 4))
    p.add_argument("--tmax", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--oracle-max", type=int, default=_ORACLE_MAX_DEFAULT)
    add_format(p)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("table1", help="the four family rows at one length")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--oracle-max", type=int, default=_ORACLE_MAX_DEFAULT)
    add_format(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("depth", help="deepest cusp excursion of one word")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="sign string like '++-'")
    group.add_argument("--syllables", help="alternating string like 'abaB'")
    add_format(p)
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser(
        "audit-lemma71", help="measure depths against both winding brackets"
    )
    p.add_argument("--tmax", type=int, default=8)
    p.add_argument("--threads", type=int, default=os.cpu_count())
    add_format(p)
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, parser)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
