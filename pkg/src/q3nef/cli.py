"""Command-line front end: ``q3nef <command> ...``.

Exit status: 0 on success, 1 when a check fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify
from .bondal import abutment_check, abutment_sum, e2_page, format_page
from .cohom import CohTable, ExtGDims, ext_g_dims, table_line_q2, table_line_q3, table_spinor_q3
from .expr import ParseError, parse, parse3
from .kclass import (
    KClass2, Line, Line2, NonIntegralError, Spinor, chern_of, chern_of2, invariants2,
    restrict_to_q2, twist, twist2,
)
from .rr import (
    ConsistencyError, chi_oracle, chi_q2, chi_q2_oracle, chi_q3_closed, chi_q3_degree_form,
    chi_spinor_closed, chi_spinor_oracle,
)


class CheckFailed(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(classify.jsonable(obj), indent=2, sort_keys=True)


# ---------------------------------------------------------------- commands

def cmd_chern(args, out):
    x = parse(args.expr)
    if isinstance(x, KClass2):
        d = chern_of2(twist2(x, args.twist, args.twist))
        data = {"space": "Q2", "rank": d.rank, "c1": list(d.c1), "c2": d.c2}
        text = f"rank {d.rank}\nc1 {d.c1}\ndeg c2 {d.c2}"
    else:
        d = chern_of(twist(x, args.twist))
        data = {"space": "Q3", "rank": d.rank, "c1": str(d.c1), "c2h": d.c2h, "c3": d.c3,
                "total": str(d.total())}
        text = f"rank {d.rank}\nc1 {d.c1}\nc2h {d.c2h}\nc3 {d.c3}\nc {d.total()}"
    out.write((dump_json(data) if args.format == "json" else text) + "\n")


def cmd_chi(args, out):
    x = parse(args.expr)
    t = args.t + args.twist
    if isinstance(x, KClass2):
        if args.spinor:
            raise ValueError("--spinor is only defined on Q3")
        y = twist2(x, t, t)
        routes = {"kunneth": chi_q2(y), "oracle": chi_q2_oracle(y)}
    elif args.spinor:
        d = chern_of(x)
        routes = {"closed": chi_spinor_closed(d, t), "oracle": chi_spinor_oracle(x, t)}
    else:
        d = chern_of(x)
        routes = {"closed": chi_q3_closed(d, t), "degree_form": chi_q3_degree_form(d, t),
                  "oracle": chi_oracle(x, t)}
    values = set(routes.values())
    if len(values) != 1:
        raise ConsistencyError(f"chi routes disagree: {routes}")
    if args.format == "json":
        out.write(dump_json({"t": t, "chi": values.pop(), "routes": routes}) + "\n")
    else:
        out.write(f"{values.pop()}\n")


def _single_atom(x):
    items = list(x)
    if len(items) != 1 or items[0][1] != 1:
        raise ValueError("table needs a single atom: O(t), S(t) or O(a,b)")
    return items[0][0]


def cmd_table(args, out):
    atom = _single_atom(parse(args.atom))
    t = args.t + args.twist
    if isinstance(atom, Line):
        tab, x = table_line_q3(atom.t + t), twist(parse3(args.atom), t)
        chi = chi_oracle(x)
    elif isinstance(atom, Spinor):
        tab, x = table_spinor_q3(atom.t + t), twist(parse3(args.atom), t)
        chi = chi_oracle(x)
    elif isinstance(atom, Line2):
        y = twist2(parse(args.atom), t, t)
        tab, chi = table_line_q2(atom.a + t, atom.b + t), chi_q2_oracle(y)
    else:
        raise ValueError(f"no cohomology table for {atom}")
    if tab.chi() != chi:
        raise CheckFailed(f"alternating sum {tab.chi()} != chi {chi}")
    if args.format == "json":
        out.write(dump_json({"h": list(tab.entries), "chi": chi}) + "\n")
    else:
        out.write(" ".join(f"h^{q}={v}" for q, v in enumerate(tab.entries)) + f"  chi={chi}\n")


def _table(text: str) -> CohTable:
    vals = [v.strip() for v in text.split(",")]
    try:
        return CohTable(None if v == "?" else int(v) for v in vals)
    except ValueError as exc:
        raise ValueError(f"bad cohomology table {text!r}: {exc}") from None


def _dims(text: str) -> ExtGDims:
    rows = [r for r in text.split("/")]
    try:
        return ExtGDims([[int(v) for v in row.split(",")] for row in rows])
    except ValueError as exc:
        raise ValueError(f"bad dimension array {text!r}: {exc}") from None


def cmd_ext(args, out):
    dims = ext_g_dims(_table(args.e), _table(args.sdual), _table(args.m1), _table(args.m2))
    if args.format == "json":
        out.write(dump_json({"rows": [list(r) for r in dims.rows]}) + "\n")
    else:
        out.write("q   O   S(-1) T4  O(-1)\n")
        for q, row in enumerate(dims.rows):
            out.write(f"{q}   " + "  ".join(f"{m:<3}" for m in row) + "\n")


def cmd_bondal(args, out):
    if args.case:
        rec = classify.bondal_record(args.case)
        spec = classify.get_case("q3", args.case)
        av = args.a if args.a is not None else rec.a_values[0]
        if av not in rec.a_values:
            raise ValueError(f"a={av} not allowed for case ({args.case})")
        r = args.rank if args.rank is not None else spec.min_rank(av if spec.a_values != (None,) else None)
        e = spec.kclass(r, av if spec.a_values != (None,) else None)
        dims, target = rec.dims(r, av), rec.target(e, r, av)
    elif args.dims:
        dims = _dims(args.dims)
        target = parse3(args.target) if args.target else None
    else:
        raise ValueError("bondal needs --dims or --case")
    page = e2_page(dims)
    total = abutment_sum(page)
    ok = target is None or abutment_check(page, target)
    if args.format == "json":
        out.write(dump_json({
            "page": {f"{p},{q}": str(x) for (p, q), x in sorted(page.items())},
            "abutment": str(total),
            "target": None if target is None else str(target),
            "pass": ok,
        }) + "\n")
    else:
        out.write(format_page(page) + f"\nabutment {total}\n")
        if target is not None:
            out.write(f"target {target}: {'pass' if ok else 'FAIL'}\n")
    if not ok:
        raise CheckFailed("abutment does not match target")


def cmd_verify(args, out):
    reports = classify.verify_all(args.theorem, rank=args.rank, a=args.a, count=args.count,
                                  twists=tuple(args.twist_list), all_a=args.all_a)
    if not reports:
        raise ValueError("no case admits the requested parameters")
    if args.format == "json":
        out.write(dump_json([rep.to_dict() for rep in reports]) + "\n")
    else:
        out.write(classify.reports_text(reports) + "\n")
    if not all(rep.passed for rep in reports):
        raise CheckFailed("some checks failed")


def cmd_restrict(args, out):
    x = parse3(args.expr)
    y = restrict_to_q2(twist(x, args.twist))
    rank, c1, c2, chi = invariants2(y)
    matches = []
    for spec in classify.catalog_q2():
        for sub in (spec, *spec.subcases):
            if rank >= sub.min_rank() and invariants2(sub.kclass(rank)) == (rank, c1, c2, chi):
                matches.append(sub.case_id)
    if args.format == "json":
        out.write(dump_json({"class": str(y), "rank": rank, "c1": list(c1), "c2": c2, "chi": chi,
                             "q2_matches": matches}) + "\n")
    else:
        out.write(f"{y}\nrank {rank}, c1={c1}, deg c2={c2}, chi={chi}\n")
        out.write("K-level matches: " + (", ".join(matches) or "none") + "\n")


def cmd_wedge(args, out):
    rank6, rank5 = classify.wedge_span_check()
    if args.format == "json":
        out.write(dump_json({"minors_rank": rank6, "restricted_rank": rank5}) + "\n")
    else:
        out.write(f"rank of the six minors: {rank6}\nspan after X01 = X23: {rank5}\n")
    if (rank6, rank5) != (6, 5):
        raise CheckFailed("wedge map is not onto H^0(O(1))")


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="q3nef", description="Exact Chern/chi calculus on Q3 and Q2.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, twist=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if twist:
            p.add_argument("--twist", type=int, default=0, help="twist by O(t) (O(t,t) on Q2)")

    p = sub.add_parser("chern", help="Chern data of an expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("chi", help="Euler characteristic of expr(t)")
    p.add_argument("expr")
    p.add_argument("t", type=int, nargs="?", default=0)
    p.add_argument("--spinor", action="store_true", help="use S^v tensor expr")
    common(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("table", help="cohomology table of O(t), S(t) or O(a,b)")
    p.add_argument("atom")
    p.add_argument("t", type=int, nargs="?", default=0)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("ext", help="assemble Ext^q(G,E) from four cohomology tables")
    for flag in ("--e", "--sdual", "--m1", "--m2"):
        p.add_argument(flag, required=True, help="comma separated h^0..h^3")
    common(p, twist=False)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("bondal", help="E2 page and abutment from Ext(G,F) dimensions")
    p.add_argument("--dims", help="rows q=0..3 separated by '/', each m0,m1,m2,m3")
    p.add_argument("--target", help="expected class of F")
    p.add_argument("--case", help="use the recorded dimensions of a Q3 case")
    p.add_argument("--rank", type=int)
    p.add_argument("--a", type=int)
    common(p, twist=False)
    p.set_defaults(func=cmd_bondal)

    p = sub.add_parser("verify-cases", help="verify the case catalogs")
    p.add_argument("--theorem", choices=("q3", "q2"), default="q3")
    p.add_argument("--rank", type=int, help="rank (default: minimal for each case)")
    p.add_argument("--a", type=int, choices=(0, 1))
    p.add_argument("--all-a", action="store_true", help="every allowed value of a")
    p.add_argument("--count", type=int, default=1, help="number of smallest ranks per case")
    p.add_argument("--twist", dest="twist_list", type=int, action="append", default=[],
                   help="extra twist t for chi cross-checks (repeatable)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("restrict", help="restrict a Q3 class to a hyperplane section Q2")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("wedge-check", help="surjectivity of s (x) t -> s ^ t onto H^0(O(1))")
    common(p, twist=False)
    p.set_defaults(func=cmd_wedge)
    return ap


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (CheckFailed, ConsistencyError, NonIntegralError) as exc:
        err.write(f"check failed: {exc}\n")
        return 1
    except (ParseError, ValueError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
