"""Command-line front end.

One subcommand per computation area, each with text, JSON, and TSV
output.  JSON payloads carry a top-level "schema": 1 and are produced
with sorted keys, so identical inputs and seed give byte-identical
output.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 resource bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .acceptance import format_result, run_suite, suite_ok
from .chars import DEFAULT_SEED, _fmt, snap_int, table_of
from .dlchar import (
    dl_dimension,
    drinfeld_count,
    drinfeld_orbit_check,
    epsilon_signs,
    green_cuspidal,
    u3_unipotent_decomposition,
)
from .duality import duality_signs, steinberg
from .errors import (
    ConsistencyError,
    DomainError,
    NumericalError,
    ResourceError,
    UsageError,
)
from .fields import GF
from .groups import build_group
from .octonion import (
    JordanElement,
    ScalarRing,
    SplitOctonion,
    composition_identity_sweep,
    jordan_det,
)
from .rootdata import (
    degrees,
    group_order_polynomial,
    order_polynomial,
    positive_roots,
    weyl_order,
)
from .tori import classical_torus_classes

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


# -- output plumbing -----------------------------------------------------------


def _effective_format(args) -> str:
    return "json" if getattr(args, "json", False) else args.format


def _emit(args, payload: dict, tsv=None, text=None) -> None:
    """payload: JSON dict; tsv: (header, rows); text: list of lines."""
    fmt = _effective_format(args)
    if fmt == "json":
        payload = dict(payload)
        payload["schema"] = 1
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "tsv":
        if tsv is None:
            rows = [(k, payload[k]) for k in sorted(payload)]
            tsv = (("key", "value"), rows)
        header, rows = tsv
        print("\t".join(str(h) for h in header))
        for row in rows:
            print("\t".join(str(c) for c in row))
    else:
        for line in text if text is not None else [f"{k}: {v}" for k, v in sorted(payload.items())]:
            print(line)


def _seed_of(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("LIETYPE_SEED")
    if env:
        try:
            return int(env, 0)
        except ValueError as exc:
            raise UsageError(f"LIETYPE_SEED is not an integer: {env!r}") from exc
    return DEFAULT_SEED


def _int_arg(text: str) -> int:
    return int(text, 0)


# -- subcommand handlers -------------------------------------------------------


def cmd_orders(args) -> int:
    if (args.type is None) == (args.family is None):
        raise UsageError("pass exactly one of --type (with --rank) or --family (with --n)")
    if args.type is not None:
        if args.rank is None:
            raise UsageError("--type needs --rank")
        fam, rank = args.type.upper(), args.rank
        poly = order_polynomial(fam, rank)
        n_pos = positive_roots(fam, rank)
        ds = degrees(fam, rank)
        factored = f"q^{n_pos} * " + " * ".join(f"(q^{d} - 1)" for d in ds)
        label = f"{fam}{rank}"
    else:
        if args.n is None:
            raise UsageError("--family needs --n")
        fam, n = args.family.upper(), args.n
        poly = group_order_polynomial(fam, n)
        if fam == "SP":
            n_pos, terms = 4, ["(q^2 - 1)", "(q^4 - 1)"]
        else:
            n_pos = n * (n - 1) // 2
            lo = 2 if fam == "SL" else 1
            if fam == "U":
                terms = [f"(q^{i} - {'-1' if i % 2 else '1'})".replace("- -1", "+ 1")
                         for i in range(lo, n + 1)]
            else:
                terms = [f"(q^{i} - 1)" for i in range(lo, n + 1)]
        factored = f"q^{n_pos} * " + " * ".join(terms)
        label = f"{fam}{n}"
    payload = {"label": label, "poly": str(poly), "factored": factored, "n_positive": n_pos}
    lines = [f"{label}: |G| = {poly}", f"  = {factored}"]
    if args.q is not None:
        payload["q"] = args.q
        payload["order"] = poly(args.q)
        lines.append(f"  at q = {args.q}: {poly(args.q)}")
    _emit(args, payload, text=lines)
    return EXIT_OK


def cmd_tori(args) -> int:
    classes = classical_torus_classes(args.family, args.n)
    rows = []
    for tc in classes:
        row = {
            "tag": tc.tag,
            "order_poly": str(tc.order_poly),
            "weyl_order": tc.weyl_order,
            "split_rank": tc.split_rank,
            "anisotropic": tc.anisotropic,
        }
        if args.q is not None:
            row["order"] = tc.order(args.q)
            row["dimension"] = dl_dimension(tc, args.q)
        rows.append(row)
    keys = list(rows[0].keys())
    payload = {"family": args.family.upper(), "n": args.n, "classes": rows}
    if args.q is not None:
        payload["q"] = args.q
    tsv = (tuple(keys), [tuple(r[k] for k in keys) for r in rows])
    lines = [f"{len(rows)} torus classes of {args.family.upper()}_{args.n}:"]
    for r in rows:
        extra = f"  |T|({args.q}) = {r['order']}, dim = {r['dimension']}" if args.q is not None else ""
        lines.append(f"  {r['tag']:>12}  |T| = {r['order_poly']:<24} |W| = {r['weyl_order']}"
                     f"  rank {r['split_rank']}{extra}")
    _emit(args, payload, tsv=tsv, text=lines)
    return EXIT_OK


def cmd_group(args) -> int:
    G = build_group(args.family, args.n, args.q)
    cc = G.conjugacy_classes()
    ss = cc.semisimple_flags()
    un = cc.unipotent_flags()
    rows = [
        (c, cc.sizes[c], cc.element_orders[c], int(ss[c]), int(un[c]))
        for c in range(cc.n_classes)
    ]
    payload = {
        "label": G.label,
        "order": G.order,
        "n_classes": cc.n_classes,
        "classes": [
            {"index": c, "size": s, "element_order": o, "semisimple": bool(f1), "unipotent": bool(f2)}
            for c, s, o, f1, f2 in rows
        ],
    }
    tsv = (("class", "size", "element_order", "semisimple", "unipotent"), rows)
    lines = [f"{G.label}: order {G.order}, {cc.n_classes} conjugacy classes",
             "  class  size  elt-order  ss  unip"]
    lines += [f"  {c:>5}  {s:>4}  {o:>9}  {f1:>2}  {f2:>4}" for c, s, o, f1, f2 in rows]
    _emit(args, payload, tsv=tsv, text=lines)
    return EXIT_OK


def cmd_chartable(args) -> int:
    G = build_group(args.family, args.n, args.q)
    tab = table_of(G, _seed_of(args))
    cc = G.conjugacy_classes()
    values = [[_fmt(v) for v in chi.values] for chi in tab.rows]
    payload = {
        "label": G.label,
        "order": G.order,
        "degrees": list(tab.degrees),
        "class_sizes": [int(s) for s in cc.sizes],
        "values": values,
    }
    header = ("degree",) + tuple(f"c{c}" for c in range(cc.n_classes))
    tsv = (header, [(d,) + tuple(row) for d, row in zip(tab.degrees, values)])
    width = max(len(s) for row in values for s in row) + 1
    lines = [f"{len(tab.rows)} irreducibles, degrees {', '.join(str(d) for d in tab.degrees)}",
             "  sizes: " + " ".join(f"{int(s):>{width}}" for s in cc.sizes)]
    lines += ["         " + " ".join(f"{s:>{width}}" for s in row) for row in values]
    _emit(args, payload, tsv=tsv, text=lines)
    return EXIT_OK


def _green_payload(args):
    seed = _seed_of(args)
    ch = green_cuspidal(args.n, args.q, args.chi, seed=seed, verify=args.verify)
    cc = ch.group.conjugacy_classes()
    values = [_fmt(v) for v in ch.values]
    payload = {
        "n": args.n,
        "q": args.q,
        "chi": args.chi,
        "degree": snap_int(ch.degree),
        "verified": bool(args.verify),
        "class_sizes": [int(s) for s in cc.sizes],
        "values": values,
    }
    tsv = (("class", "size", "value"),
           [(c, int(cc.sizes[c]), values[c]) for c in range(cc.n_classes)])
    lines = [f"cuspidal character of GL_{args.n}(F_{args.q}), exponent {args.chi}: "
             f"degree {payload['degree']}"
             + (" (verified against the table oracle)" if args.verify else ""),
             "  " + " ".join(values)]
    return payload, tsv, lines


def cmd_green(args) -> int:
    payload, tsv, lines = _green_payload(args)
    _emit(args, payload, tsv=tsv, text=lines)
    return EXIT_OK


def cmd_dl(args) -> int:
    if args.dl_cmd == "dims":
        classes = classical_torus_classes(args.family, args.n)
        rows = []
        for tc in classes:
            eg, et = epsilon_signs(tc)
            rows.append((tc.tag, tc.order(args.q), tc.weyl_order, eg * et,
                         dl_dimension(tc, args.q)))
        payload = {
            "family": args.family.upper(),
            "n": args.n,
            "q": args.q,
            "classes": [
                {"tag": t, "torus_order": o, "weyl_order": w, "sign": s, "dimension": d}
                for t, o, w, s, d in rows
            ],
        }
        tsv = (("tag", "torus_order", "weyl_order", "sign", "dimension"), rows)
        lines = [f"signed dimensions for {args.family.upper()}_{args.n}(F_{args.q}):"]
        lines += [f"  {t:>12}  |T| = {o:<6} |W| = {w:<3} sign {s:+d}  dim {d}"
                  for t, o, w, s, d in rows]
        _emit(args, payload, tsv=tsv, text=lines)
        return EXIT_OK
    if args.dl_cmd == "green":
        payload, tsv, lines = _green_payload(args)
        _emit(args, payload, tsv=tsv, text=lines)
        return EXIT_OK
    if args.dl_cmd == "drinfeld":
        if args.action:
            payload = drinfeld_orbit_check(args.q, args.ext)
            lines = [f"curve points over F_{args.q}^{args.ext}: {payload['count']}",
                     f"  free action of the {payload['group_order']}-element matrix group: "
                     f"{payload['free']}; orbits {payload['orbits']} {payload['orbit_sizes']}"]
        else:
            count = drinfeld_count(args.q, args.ext)
            payload = {"q": args.q, "ext": args.ext, "count": count}
            lines = [f"curve points over F_{args.q}^{args.ext}: {count}"]
        _emit(args, payload, text=lines)
        return EXIT_OK
    if args.dl_cmd == "u3":
        d = u3_unipotent_decomposition(args.q, _seed_of(args))
        payload = dict(d)
        payload["constituents"] = [list(t) for t in d["constituents"]]
        lines = [f"anisotropic-torus character of U_3(F_{args.q}):",
                 f"  dimension {d['dimension']}, <R,R> = {d['norm_squared']}",
                 f"  constituents (degree, multiplicity): {d['constituents']}",
                 f"  pi: degree {d['pi_degree']}, cuspidal {d['pi_cuspidal']}, "
                 f"orthogonal to the quasi-split series: {d['orthogonal_to_split_series']}"]
        _emit(args, payload, text=lines)
        return EXIT_OK
    raise UsageError("dl needs one of: dims, green, drinfeld, u3")


def cmd_duality(args) -> int:
    G = build_group(args.family, args.n, args.q)
    seed = _seed_of(args)
    tab = table_of(G, seed)
    st = steinberg(G)
    signs = duality_signs(tab)
    rows = [(i, tab.degrees[i], j, s) for i, (j, s) in enumerate(signs)]
    payload = {
        "label": G.label,
        "steinberg_degree": snap_int(st.degree),
        "rows": [{"index": i, "degree": d, "dual": j, "sign": s} for i, d, j, s in rows],
    }
    tsv = (("index", "degree", "dual", "sign"), rows)
    lines = [f"{G.label}: dim St = {snap_int(st.degree)}; duality on irreducibles:"]
    lines += [f"  {i:>3} (degree {d:>3}) -> {s:+d} * irreducible {j}" for i, d, j, s in rows]
    _emit(args, payload, tsv=tsv, text=lines)
    return EXIT_OK


def cmd_oct(args) -> int:
    if args.oct_cmd != "verify":
        raise UsageError("oct needs the verify subcommand")
    seed = _seed_of(args)
    composition_identity_sweep(args.p, args.samples, seed=seed)
    ring = ScalarRing(args.p)
    basis = SplitOctonion.basis(ring)
    triple = None
    for i in range(8):
        for j in range(8):
            for k in range(8):
                if (basis[i] * basis[j]) * basis[k] != basis[i] * (basis[j] * basis[k]):
                    triple = (i, j, k)
                    break
            if triple:
                break
        if triple:
            break
    det_one = jordan_det(JordanElement.identity(ring)) == ring.one
    payload = {
        "p": args.p,
        "samples": args.samples,
        "composition_identity": True,
        "non_associating_triple": list(triple) if triple else None,
        "det_identity_is_one": bool(det_one),
    }
    if triple is None or not det_one:
        raise ConsistencyError("octonion verification failed")
    lines = [f"composition identity holds on {args.samples} random pairs over F_{args.p}",
             f"  non-associating basis triple: {triple}; det(identity) = 1: {det_one}"]
    _emit(args, payload, text=lines)
    return EXIT_OK


def cmd_field(args) -> int:
    F = GF(args.q)
    payload = {
        "q": F.q,
        "p": F.p,
        "k": F.k,
        "defining_poly": list(F.defining),
        "tabulated": bool(F.conway),
    }
    poly = " + ".join(f"{c}*x^{i}" for i, c in enumerate(F.defining) if c)
    lines = [f"F_{F.q} = F_{F.p}[x] / ({poly})",
             f"  characteristic {F.p}, degree {F.k}, "
             f"{'tabulated' if F.conway else 'least-primitive'} defining polynomial"]
    _emit(args, payload, text=lines)
    return EXIT_OK


def cmd_report(args) -> int:
    from .report import write_group_report  # matplotlib import deferred to here

    paths = write_group_report(args.out, args.family, args.n, args.q, _seed_of(args))
    payload = {"out": args.out, "files": [os.path.basename(p) for p in paths]}
    _emit(args, payload, text=[f"wrote {p}" for p in paths])
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "all":
        numbers = None
    else:
        try:
            numbers = [int(tok) for tok in args.suite.split(",") if tok]
        except ValueError as exc:
            raise UsageError(f"bad --suite value {args.suite!r}") from exc
        bad = [n for n in numbers if not 1 <= n <= 13]
        if bad:
            raise UsageError(f"no such check: {bad}; the suite has checks 1..13")
    results = run_suite(numbers, _seed_of(args))
    ok = suite_ok(results)
    payload = {
        "ok": ok,
        "results": [
            {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
    }
    lines = [format_result(r) for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    tsv = (("number", "name", "passed", "detail"),
           [(r.number, r.name, int(r.passed), r.detail) for r in results])
    _emit(args, payload, tsv=tsv, text=lines)
    return EXIT_OK if ok else EXIT_VERIFY


# -- parser --------------------------------------------------------------------


def _family_arg(p, default=None):
    p.add_argument("--family", choices=("gl", "sl", "u", "sp"), default=default,
                   help="classical matrix family")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lietype",
        description="finite reductive groups: orders, character tables, torus data, "
                    "virtual characters, duality, curve counts, split octonions",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", "-f", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--json", action="store_true", help="shorthand for --format json")
    common.add_argument("--seed", type=_int_arg, default=None,
                        help="oracle seed (default: LIETYPE_SEED or 0x5EED)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("orders", parents=[common], help="order polynomials and exact orders")
    p.add_argument("--type", choices=tuple("abcdefg") + tuple("ABCDEFG"))
    p.add_argument("--rank", type=int)
    _family_arg(p)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.set_defaults(fn=cmd_orders)

    p = sub.add_parser("tori", parents=[common], help="maximal-torus classes")
    _family_arg(p, default="gl")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int)
    p.set_defaults(fn=cmd_tori)

    p = sub.add_parser("group", parents=[common], help="enumerate a group and its classes")
    _family_arg(p, default="gl")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("chartable", parents=[common], help="irreducible character table")
    _family_arg(p, default="gl")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(fn=cmd_chartable)

    def green_args(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--chi", type=int, required=True,
                       help="exponent of the extension-field character")
        p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True,
                       help="cross-check against the table oracle (default on)")

    p = sub.add_parser("green", parents=[common], help="cuspidal character values")
    green_args(p)
    p.set_defaults(fn=cmd_green)

    p = sub.add_parser("dl", parents=[common], help="virtual-character toolbox")
    dl_sub = p.add_subparsers(dest="dl_cmd", required=True)
    d = dl_sub.add_parser("dims", parents=[common], help="signed dimensions per torus class")
    _family_arg(d, default="gl")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--q", type=int, required=True)
    d = dl_sub.add_parser("green", parents=[common], help="cuspidal character values")
    green_args(d)
    d = dl_sub.add_parser("drinfeld", parents=[common], help="curve point counts")
    d.add_argument("--q", type=int, required=True)
    d.add_argument("--ext", type=int, required=True, help="extension degree d")
    d.add_argument("--action", action="store_true",
                   help="also verify the free matrix-group action")
    d = dl_sub.add_parser("u3", parents=[common], help="anisotropic-torus decomposition")
    d.add_argument("--q", type=int, default=2)
    p.set_defaults(fn=cmd_dl)

    p = sub.add_parser("duality", parents=[common], help="Steinberg and the duality involution")
    _family_arg(p, default="gl")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(fn=cmd_duality)

    p = sub.add_parser("oct", parents=[common], help="split-octonion checks")
    oct_sub = p.add_subparsers(dest="oct_cmd", required=True)
    o = oct_sub.add_parser("verify", parents=[common], help="composition identity sweep")
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--samples", type=int, default=10_000)
    p.set_defaults(fn=cmd_oct)

    p = sub.add_parser("field", parents=[common], help="finite-field construction data")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(fn=cmd_field)

    p = sub.add_parser("report", parents=[common],
                       help="render figures and TSV tables to a directory")
    _family_arg(p, default="gl")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    p.add_argument("--suite", default="all", help='"all" or a comma list like "1,6,13"')
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"lietype: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"lietype: out of the implemented domain: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"lietype: resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ConsistencyError, NumericalError) as exc:
        print(f"lietype: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
