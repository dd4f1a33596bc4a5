"""Command-line interface.

Exit codes: 0 success, 1 failed verification, 2 parse error (reported with
its position), 3 domain error (e.g. a non-vexillary target where a triple is
required).
"""
from __future__ import annotations

import argparse
import sys

from . import serialize as ser
from .lambdapoly import DegreeBoundError, LambdaPoly
from .permutations import NotVexillaryError, Permutation


def _emit_lambda(f: LambdaPoly, fmt: str) -> str:
    if fmt == "json":
        return ser.dumps(ser.poly_to_obj(f))
    if fmt == "latex":
        return ser.poly_latex(f)
    return ser.poly_text(f)


def _emit_gamma(g, fmt: str) -> str:
    if fmt == "json":
        return ser.dumps(ser.gamma_to_obj(g))
    if fmt == "latex":
        return ser.gamma_latex(g)
    return ser.gamma_text(g)


def _emit_base_coeffs(co: dict, fmt: str) -> str:
    items = sorted(co.items(), key=lambda t: (t[0].length(), t[0].lo, t[0].vals))
    if fmt == "json":
        obj = [{"w": ser.format_perm(w), "coeff": ser.base_to_obj(a)}
               for w, a in items]
        return ser.dumps(obj)
    lines = []
    for w, a in items:
        txt = ser.base_text(a, tex=(fmt == "latex"))
        lines.append(f"{ser.format_perm(w)}: {txt}")
    return "\n".join(lines)


def cmd_compute(args) -> int:
    kind = args.kind
    fmt = args.format
    if kind in ("schubert", "twisted", "stanley"):
        w = ser.parse_perm(args.target)
        from .schubert import schubert, stanley, twisted
        if kind == "schubert":
            f = twisted(w) if args.twisted else schubert(w)
        elif kind == "twisted":
            f = twisted(w)
        else:
            f = stanley(w)
        print(_emit_lambda(f, fmt))
        return 0
    if kind == "multischur":
        lam = ser.parse_partition(args.target)
        from .schubert import multivariate_schur
        print(_emit_lambda(multivariate_schur(lam), fmt))
        return 0
    if kind == "schubert-c":
        tau = ser.parse_triple_c(args.target)
        from .type_c import schubert_c_vexillary
        print(_emit_gamma(schubert_c_vexillary(tau), fmt))
        return 0
    raise AssertionError(kind)


def cmd_product(args) -> int:
    from .structure import product_structure
    u = ser.parse_perm(args.u)
    v = ser.parse_perm(args.v)
    co = product_structure(u, v)
    print(_emit_base_coeffs(co, args.format))
    return 0


def cmd_interpolate(args) -> int:
    from .structure import interpolate
    f = ser.parse_poly(args.poly)
    co = interpolate(f)
    print(_emit_base_coeffs(co, args.format))
    return 0


def cmd_transition(args) -> int:
    from .structure import transition
    w = ser.parse_perm(args.w)
    if w.is_identity():
        raise ValueError("transition undefined for the identity")
    t = transition(w)
    obj = {"r": t.r, "s": t.s, "v": ser.format_perm(t.v),
           "covers": [ser.format_perm(c) for c in t.covers]}
    if args.format == "json":
        print(ser.dumps(obj))
    else:
        print(f"r={t.r} s={t.s} v={obj['v']}")
        for c in obj["covers"]:
            print(f"cover {c}")
    return 0


def cmd_localize(args) -> int:
    from .schubert import schubert
    from .structure import localize
    v = ser.parse_perm(args.v)
    w = ser.parse_perm(args.w)
    val = localize(v, schubert(w))
    if args.format == "json":
        print(ser.dumps(ser.base_to_obj(val)))
    else:
        print(ser.base_text(val, tex=(args.format == "latex")))
    return 0


def cmd_verify_table(args) -> int:
    from .serialize import format_perm
    from .table_data import verify_table
    rows = verify_table()
    npass = 0
    for w, ok in rows:
        print(("PASS" if ok else "FAIL") + f"  {format_perm(w)}")
        npass += ok
    print(f"{npass}/{len(rows)} rows match")
    return 0 if npass == len(rows) else 1


def cmd_check(args) -> int:
    from .checks import run_suite
    try:
        reports = run_suite(args.suite, seed=args.seed, degree=args.degree)
    except KeyError as e:
        print(e.args[0], file=sys.stderr)
        return 2
    ok = True
    for rep in reports:
        for line in rep.lines():
            print(line)
        ok = ok and rep.ok
    return 0 if ok else 1


def cmd_gamma_nf(args) -> int:
    from .type_c import normal_form
    f = ser.parse_zc(args.expr)
    g = normal_form(f, bound=args.degree)
    print(_emit_gamma(g, args.format))
    return 0


def cmd_qlambda(args) -> int:
    from .partitions import is_strict
    from .serialize import parse_partition
    from .type_c import ZCPoly, q_pfaffian
    lam = parse_partition(args.mu)
    if not is_strict(lam):
        raise ValueError(f"{lam} is not strict")
    q = q_pfaffian(lam)
    if args.format == "json":
        obj = [{"z": a, "c": list(m), "n": c}
               for (a, m), c in sorted(q.terms.items())]
        print(ser.dumps(obj))
    else:
        bits = []
        for (a, m), c in sorted(q.terms.items()):
            mono = "*".join((["z"] if a == 1 else [f"z^{a}"] if a else [])
                            + [f"c{t}" for t in m])
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        print(" + ".join(bits).replace("+ -", "- "))
    return 0


def cmd_project_ac(args) -> int:
    from .schubert import twisted
    from .type_c import project_a_to_c
    w = ser.parse_perm(args.w)
    if not w.in_s_plus():
        raise ValueError("projection needs a permutation of the positive integers")
    print(_emit_gamma(project_a_to_c(twisted(w)), args.format))
    return 0


def cmd_verify_atoc(args) -> int:
    from .checks import run_suite
    rep = run_suite("atoc", seed=args.seed, degree=args.degree)[0]
    for line in rep.lines():
        print(line)
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="schubert-ac",
        description="Enriched Schubert polynomials of types A and C: "
                    "exact computation and verification.")
    ap.add_argument("--format", choices=("json", "latex", "text"),
                    default="json")
    ap.add_argument("--degree", type=int, default=None,
                    help="degree bound where one applies")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--window", default=None,
                    help="p:n window hint for parsers (informational)")
    ap.add_argument("--twisted", action="store_true",
                    help="compute the twisted polynomial where applicable")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a named polynomial")
    p.add_argument("kind", choices=("schubert", "twisted", "stanley",
                                    "multischur", "schubert-c"))
    p.add_argument("target")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("product", help="structure constants of S_u * S_v")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("interpolate", help="basis coefficients of an expression")
    p.add_argument("poly")
    p.set_defaults(fn=cmd_interpolate)

    p = sub.add_parser("transition", help="transition step of w")
    p.add_argument("w")
    p.set_defaults(fn=cmd_transition)

    p = sub.add_parser("localize", help="phi_v applied to the polynomial of w")
    p.add_argument("v")
    p.add_argument("w")
    p.set_defaults(fn=cmd_localize)

    p = sub.add_parser("verify-table", help="recompute the [0,3] window table")
    p.set_defaults(fn=cmd_verify_table)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("gamma-nf", help="normal form in the type C ring")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_gamma_nf)

    p = sub.add_parser("qlambda", help="pfaffian Q_mu for a strict partition")
    p.add_argument("mu")
    p.set_defaults(fn=cmd_qlambda)

    p = sub.add_parser("schubert-c", help="vexillary type C polynomial of a triple")
    p.add_argument("target")
    p.set_defaults(fn=lambda a: cmd_compute(_with(a, kind="schubert-c",
                                                  target=a.target)))

    p = sub.add_parser("project-ac", help="project the twisted type A polynomial")
    p.add_argument("w")
    p.set_defaults(fn=cmd_project_ac)

    p = sub.add_parser("verify-atoc", help="run the type A to type C checks")
    p.set_defaults(fn=cmd_verify_atoc)
    return ap


class _with:
    def __init__(self, args, **over):
        self.__dict__.update(vars(args))
        self.__dict__.update(over)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "check":
        if args.degree is None:
            args.degree = 5
    try:
        return args.fn(args)
    except ser.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (NotVexillaryError, DegreeBoundError, ValueError) as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
