"""Command-line interface.

Subcommands::

    quadff zeta --q 3 "y^2 = 2*(x+2)*(x^2+1)*(x^2+x+2)"
    quadff classify --q 3 "y^2 = 2*(x+2)*(x^2+1)*(x^2+x+2)"
    quadff search --q 2 --g 3 --h 4
    quadff tables [--h H] [--format text|jsonl] [--jobs N] [--no-cache]
    quadff selftest [--jobs N] [--no-cache]

Fields may be given as --q 9 or as --p 3 --n 2.  ``tables`` prints the
full classification; ``selftest`` replays the previously reported
examples and the property suites and exits nonzero if anything fails
(including the known disagreement with the reported class list; see the
README).  Set QUADFF_CACHE_DIR to move the search cache.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import classification_record
from .curve import ModelError, parse_curve
from .gf import FiniteField, field, field_of_order
from .reference import CORRECTED, MISCOMPUTED, REFERENCE_CLASSES, REFERENCE_TOTALS, reference_cell_count
from .search import classification_table, full_classification, search_cell
from .zeta import zeta_report


def _add_field_args(sub, required: bool) -> None:
    sub.add_argument("--q", type=int, help="field size (a prime power)")
    sub.add_argument("--p", type=int, help="characteristic (with --n)")
    sub.add_argument("--n", type=int, help="extension degree over F_p")


def _field_from_args(args) -> FiniteField:
    if args.p is not None:
        F = field(args.p, args.n or 1)
        if args.q is not None and args.q != F.q:
            raise ValueError(f"--q {args.q} contradicts --p/--n (q={F.q})")
        return F
    if args.n is not None:
        raise ValueError("--n requires --p")
    if args.q is None:
        raise ValueError("a field is required: --q Q or --p P [--n N]")
    return field_of_order(args.q)


def _cmd_zeta(args) -> int:
    F = _field_from_args(args)
    model = parse_curve(F, args.curve)
    rep = zeta_report(model)
    if args.format == "jsonl":
        print(json.dumps(rep.as_dict(), sort_keys=True,
                         separators=(",", ":")))
        return 0
    rows = [
        ("equation", model.describe()),
        ("field", f"F_{rep.q}(x)"),
        ("genus", str(rep.genus)),
        ("np_1..np_g", str(list(rep.point_counts))),
        ("N_1..N_g", str(list(rep.place_counts))),
        ("S_1..S_g", str(list(rep.power_sums))),
        ("L coefficients", str(list(rep.l_coeffs))),
        ("class number h", str(rep.h)),
        ("RH deviation", f"{rep.rh_dev:.2e}"),
    ]
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k:<{width}}  {v}")
    return 0


def _cmd_classify(args) -> int:
    F = _field_from_args(args)
    record = classification_record(parse_curve(F, args.curve))
    if args.format == "jsonl":
        print(json.dumps(record.as_dict(), sort_keys=True,
                         separators=(",", ":")))
    else:
        print("\n".join(record.text_lines()))
    return 0


def _cmd_search(args) -> int:
    F = _field_from_args(args)
    cell = search_cell(F.q, args.g, args.h, strict_gamma=args.strict_gamma,
                       use_cache=not args.no_cache)
    print(classification_table([cell], fmt=args.format).rstrip("\n"))
    return 0


def _cmd_tables(args) -> int:
    hs = (args.h,) if args.h else (2, 4, 8, 16, 32)
    cells = full_classification(hs, jobs=args.jobs,
                                strict_gamma=args.strict_gamma,
                                use_cache=not args.no_cache)
    print(classification_table(cells, fmt=args.format).rstrip("\n"))
    return 0


def _cmd_selftest(args) -> int:
    failures = 0
    nchecks = 0

    def check(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures, nchecks
        mark = "ok  " if ok else "FAIL"
        line = f"[{mark}] {name}"
        if detail and not ok:
            line += f" -- {detail}"
        print(line, flush=True)
        nchecks += 1
        failures += 0 if ok else 1

    for e in REFERENCE_CLASSES + (MISCOMPUTED, CORRECTED):
        rec = classification_record(e.model)
        got = (rec.q, rec.g, rec.h, rec.place_counts)
        want = (e.q, e.g, e.h, e.place_counts)
        check(f"replay {e.label}: q={e.q} g={e.g} h={e.h} N={e.place_counts}",
              got == want, f"engine produced {got}")
    check("miscomputed curve is not exponent two",
          not classification_record(MISCOMPUTED.model).exponent_two)
    check("corrected curve is exponent two",
          classification_record(CORRECTED.model).exponent_two)

    cells = full_classification(jobs=args.jobs, use_cache=not args.no_cache)
    bad_props = [f for c in cells for f in c.property_failures]
    check("zeta property suite over all enumerated curves (0 violations)",
          not bad_props, f"{len(bad_props)} violations, first: "
          + (bad_props[0] if bad_props else ""))
    mismatch = []
    for c in cells:
        for r in c.classes:
            if not (r.h == c.h and r.place_counts[0] <= r.h):
                mismatch.append(r.describe())
    check("every class has the exponent-two h and N_1 <= h", not mismatch,
          "; ".join(mismatch[:3]))

    extras = []
    missing = []
    for c in cells:
        want = reference_cell_count(c.q, c.g, c.h)
        got = len(c.classes)
        if got > want:
            extras.append(f"(q={c.q},g={c.g},h={c.h}): {got} found, "
                          f"{want} previously reported")
        elif got < want:
            missing.append(f"(q={c.q},g={c.g},h={c.h}): {got} found, "
                           f"{want} previously reported")
    check("no previously reported class is missing", not missing,
          "; ".join(missing))
    check(f"class counts match the previously reported totals "
          f"{REFERENCE_TOTALS}", not extras,
          "surplus classes at " + "; ".join(extras))

    print(f"{nchecks - failures}/{nchecks} checks passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quadff",
        description="class numbers of quadratic function fields over F_q")
    sp = ap.add_subparsers(dest="command", required=True)

    z = sp.add_parser("zeta", help="L-polynomial, place counts, h")
    _add_field_args(z, required=True)
    z.add_argument("curve", help='e.g. "y^2 = x^3+2*x" or '
                                 '"u = (x^2+x+1)/(x)"')
    z.add_argument("--format", choices=("text", "jsonl"), default="text")
    z.set_defaults(func=_cmd_zeta)

    c = sp.add_parser("classify", help="exponent-two verdict for one curve")
    _add_field_args(c, required=True)
    c.add_argument("curve")
    c.add_argument("--format", choices=("text", "jsonl"), default="text")
    c.set_defaults(func=_cmd_classify)

    s = sp.add_parser("search", help="all classes in one (q, g, h) cell")
    _add_field_args(s, required=True)
    s.add_argument("--g", type=int, required=True, help="genus")
    s.add_argument("--h", type=int, required=True,
                   help="class number target (2, 4, 8, 16 or 32)")
    s.add_argument("--format", choices=("text", "jsonl"), default="text")
    s.add_argument("--no-cache", action="store_true")
    s.add_argument("--strict-gamma", action="store_true",
                   help="also enumerate higher ramification pole orders "
                        "(characteristic two)")
    s.set_defaults(func=_cmd_search)

    t = sp.add_parser("tables", help="the full classification table")
    t.add_argument("--h", type=int,
                   help="restrict to one class number (default: all)")
    t.add_argument("--format", choices=("text", "jsonl"), default="text")
    t.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    t.add_argument("--no-cache", action="store_true")
    t.add_argument("--strict-gamma", action="store_true")
    t.set_defaults(func=_cmd_tables)

    st = sp.add_parser("selftest",
                       help="replay recorded examples and property suites")
    st.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    st.add_argument("--no-cache", action="store_true")
    st.set_defaults(func=_cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ModelError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
