"""Command line front end.

Exit status: 0 success, 1 usage error, 2 domain error (for example the
normal-embedding formula on a poset that is not a rooted forest), 3 when a
``verify`` run reports failures.  Diagnostics go to stderr.  JSON output
writes every integer as a string.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import genfun
from .automata import accept_series, build_M_automaton, build_Z_automaton
from .chebyshev import format_lambda_table, lambda_table
from .incidence import IntervalCache, mobius_normal
from .ncseries import series_M, series_Z, verify_telescoping
from .poset import NotRootedForestError, PosetError, make_chain, resolve_poset
from .ratfn import format_ratfn
from . import report
from .words import all_embeddings, compact, defect, format_word, normal_embeddings, parse_word


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p):
    p.add_argument("--poset", help="chain:N | antichain:Q | lambda | forest:L1,L2,... | file:PATH")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser():
    parser = _Parser(prog="subword-mobius", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mobius", help="Möbius value μ(U, W)")
    p.add_argument("u")
    p.add_argument("w")
    p.add_argument("--method", choices=["normal", "oracle", "both"], default="both")
    _common(p)

    p = sub.add_parser("zeta-power", help="number of multichains of length M from U to W")
    p.add_argument("u")
    p.add_argument("w")
    p.add_argument("m", type=int)
    _common(p)

    p = sub.add_parser("interval", help="list the interval [U, W]")
    p.add_argument("u")
    p.add_argument("w")
    _common(p)

    p = sub.add_parser("embeddings", help="list embeddings of U into W with defects")
    p.add_argument("u")
    p.add_argument("w")
    p.add_argument("--normal", action="store_true")
    _common(p)

    p = sub.add_parser("series", help="truncated Z(U) or M(U)")
    p.add_argument("which", choices=["Z", "M"])
    p.add_argument("u")
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--grading", choices=["length", "norm"], default="length")
    _common(p)

    p = sub.add_parser("automaton", help="pair automata for Z⊗ and M⊗ over [N]")
    p.add_argument("which", choices=["Z", "M"])
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--dump", action="store_true")
    g.add_argument("--accept", type=int, metavar="L")
    _common(p)

    p = sub.add_parser("genfun", help="commutative generating functions")
    p.add_argument(
        "which",
        choices=["Znorm", "Mnorm", "Zlen", "Mlen", "ZPnorm", "MPnorm", "zetapow", "am-bm", "Zgen", "Mgen"],
    )
    p.add_argument("--type", default="", help="comma separated letter multiplicities l_1,...,l_n")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--grading", choices=["length", "norm"], default="norm")
    p.add_argument("--taylor", type=int, metavar="D", help="also print coefficients up to degree D")
    _common(p)

    p = sub.add_parser("verify", help="run a verification and print a pass/fail report")
    p.add_argument("check", choices=["telescoping", "sum-identity", "closed-forms", "oracle-suite", "discrepancies"])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--grading", choices=["length", "norm"], default="norm")
    p.add_argument("--max-m", type=int, default=12)
    p.add_argument("--max-k", type=int, default=12)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lambda", help="table of μ(a^i, c^j) in Λ* against Chebyshev coefficients")
    p.add_argument("--max", type=int, default=4, dest="max_j")
    p.add_argument("--json", action="store_true")
    return parser


def _default_poset(args, *texts):
    if args.poset:
        return resolve_poset(args.poset)
    top = 1
    for text in texts:
        for part in filter(None, (s.strip() for s in text.split(","))):
            try:
                top = max(top, int(part))
            except ValueError:
                raise UsageError(f"letter {part!r} needs --poset (default poset is a chain)") from None
    return make_chain(top)


def _emit(args, text_lines, payload):
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_mobius(args):
    P = _default_poset(args, args.u, args.w)
    u, w = parse_word(args.u, P), parse_word(args.w, P)
    payload = {"u": format_word(u, P, ""), "w": format_word(w, P, "")}
    if args.method in ("oracle", "both"):
        payload["oracle"] = IntervalCache(P).mobius(u, w)
    if args.method in ("normal", "both"):
        payload["normal"] = mobius_normal(u, w, P)
    mu = payload.get("normal", payload.get("oracle"))
    line = f"mu={mu}"
    out = {"u": payload["u"], "w": payload["w"], "mu": str(mu), "method": args.method}
    if args.method == "both":
        agree = payload["normal"] == payload["oracle"]
        line += f" agree={'true' if agree else 'false'}"
        out["agree"] = agree
        out["oracle"] = str(payload["oracle"])
        out["normal"] = str(payload["normal"])
    _emit(args, [line], out)
    return 0


def _cmd_zeta_power(args):
    P = _default_poset(args, args.u, args.w)
    u, w = parse_word(args.u, P), parse_word(args.w, P)
    if args.m < 0:
        raise UsageError("M must be nonnegative")
    value = IntervalCache(P).zeta_power(u, w, args.m)
    _emit(args, [str(value)], {"value": str(value), "m": str(args.m)})
    return 0


def _cmd_interval(args):
    P = _default_poset(args, args.u, args.w)
    u, w = parse_word(args.u, P), parse_word(args.w, P)
    members = IntervalCache(P).interval(u, w)
    _emit(args, [compact(v, P) for v in members], {"interval": [format_word(v, P, "") for v in members]})
    return 0


def _cmd_embeddings(args):
    P = _default_poset(args, args.u, args.w)
    u, w = parse_word(args.u, P), parse_word(args.w, P)
    embs = normal_embeddings(u, w, P) if args.normal else all_embeddings(u, w, P)
    rows = []
    for e in embs:
        d = defect(e, P) if P.is_rooted_forest else None
        rows.append((e.format(P), d))
    lines = [f"{text} defect={d}" if d is not None else text for text, d in rows]
    payload = {"embeddings": [{"entries": t, "defect": None if d is None else str(d)} for t, d in rows]}
    _emit(args, lines, payload)
    return 0


def _cmd_series(args):
    P = _default_poset(args, args.u)
    u = parse_word(args.u, P)
    if args.bound < 0:
        raise UsageError("bound must be nonnegative")
    f = series_Z(u, P, args.grading, args.bound) if args.which == "Z" else series_M(u, P, args.grading, args.bound)
    lines = f.lines(P)
    payload = {"terms": [{"word": compact(w, P, ""), "coef": str(c)} for w, c in sorted(f.coeffs.items(), key=lambda i: (f.grade(i[0]), i[0]))]}
    _emit(args, lines, payload)
    return 0


def _cmd_automaton(args):
    if args.n < 1:
        raise UsageError("--n must be positive")
    aut = build_Z_automaton(args.n) if args.which == "Z" else build_M_automaton(args.n)
    if args.accept is None:
        lines = aut.dump()
        _emit(args, lines, {"arcs": lines})
        return 0
    P = make_chain(args.n)
    acc = accept_series(aut, args.accept)
    items = sorted(acc.items(), key=lambda i: (len(i[0][1]), i[0][1], len(i[0][0]), i[0][0]))
    lines = [f"{c}*{compact(u, P)}⊗{compact(w, P)}" for (u, w), c in items]
    payload = {"terms": [{"u": compact(u, P, ""), "w": compact(w, P, ""), "coef": str(c)} for (u, w), c in items]}
    _emit(args, lines, payload)
    return 0


def _parse_type(text, n=None):
    try:
        tv = [int(x) for x in text.split(",") if x.strip()] if text.strip() else []
    except ValueError:
        raise UsageError(f"bad type vector {text!r}") from None
    if any(l < 0 for l in tv):
        raise UsageError("type vector entries must be nonnegative")
    if n is not None:
        if len(tv) > n:
            if any(tv[n:]):
                raise UsageError(f"type vector {text!r} uses letters beyond [{n}]")
            tv = tv[:n]
        tv = tv + [0] * (n - len(tv))
    return tuple(tv)


def _cmd_genfun(args):
    var = "t" if args.which in ("Zlen", "Mlen", "Zgen", "Mgen") else "x"
    if args.which in ("Znorm", "Mnorm", "Zlen", "Mlen", "zetapow"):
        if args.n is None:
            raise UsageError(f"{args.which} needs --n")
        if args.n < 1:
            raise UsageError("--n must be positive")
        tv = _parse_type(args.type, args.n)
    results = {}
    if args.which == "Znorm":
        results["Z"] = genfun.Z_norm(tv, args.n)
    elif args.which == "Mnorm":
        results["M"] = genfun.M_norm(tv, args.n)
    elif args.which == "Zlen":
        results["Z"] = genfun.Z_len(tv, args.n)
    elif args.which == "Mlen":
        results["M"] = genfun.M_len(tv, args.n)
    elif args.which == "ZPnorm":
        results["Z"] = genfun.Z_P_norm(_parse_type(args.type))
    elif args.which == "MPnorm":
        results["M"] = genfun.M_P_norm(_parse_type(args.type))
    elif args.which == "zetapow":
        if args.m < 0:
            raise UsageError("--m must be nonnegative")
        var = "x" if args.grading == "norm" else "t"
        results["zeta^m"] = genfun.zeta_power_genfun(tv, args.n, args.m, args.grading)
    elif args.which == "am-bm":
        if args.m < 0:
            raise UsageError("--m must be nonnegative")
        var = "x" if args.grading == "norm" else "t"
        closed = genfun.closed_am_bm_norm if args.grading == "norm" else genfun.closed_am_bm_len
        results["a_m"], results["b_m"] = closed(args.m)
    else:
        P = resolve_poset(args.poset) if args.poset else None
        if P is None:
            raise UsageError(f"{args.which} needs --poset")
        tv = _parse_type(args.type, P.size)
        results["Z" if args.which == "Zgen" else "M"] = (
            genfun.Z_len_general(P, tv) if args.which == "Zgen" else genfun.M_len_general(P, tv)
        )
    lines, payload = [], {}
    multi = len(results) > 1
    for name, f in results.items():
        text = format_ratfn(f, var)
        lines.append(f"{name} = {text}" if multi else text)
        entry = {"numerator": [str(c) for c in f.num.coeffs], "denominator": [str(c) for c in f.den.coeffs], "text": text}
        if args.taylor is not None:
            coeffs = f.taylor(args.taylor)
            lines.append(", ".join(str(c) for c in coeffs))
            entry["taylor"] = [str(c) for c in coeffs]
        payload[name] = entry
    _emit(args, lines, payload)
    return 0


def _cmd_verify(args):
    if args.check == "telescoping":
        rep = verify_telescoping(args.n, args.grading, args.bound)
        checks = [report.Check(c.name, c.passed, "" if c.passed else str(c.first_mismatch)) for c in rep.checks]
        header = [rep.lines()[0]]
    elif args.check == "sum-identity":
        checks = report.sum_identity_checks(args.max_m, args.max_k)
        header = [f"sum identity 0 <= m <= {args.max_m}, 0 <= k <= {args.max_k}"]
    elif args.check == "closed-forms":
        checks = report.closed_form_checks(args.max_m)
        header = [f"closed forms for a_m, b_m, 0 <= m <= {args.max_m}"]
    elif args.check == "oracle-suite":
        checks = report.oracle_suite()
        header = ["normal-embedding formula against the Möbius recursion"]
    else:
        header = ["displayed forms checked against brute force"]
        checks = []
        lines = list(header)
        for title, d in report.discrepancy_report():
            lines.append(f"# {title}")
            lines.extend("  " + l for l in d.lines())
            checks.append(report.Check(title, (not d.displayed_ok) and d.validated_ok, d.witness))
        passed = all(c.passed for c in checks)
        lines.append(f"{'PASS' if passed else 'FAIL'} all displayed forms refuted, all validated forms confirmed")
        _emit(args, lines, {"checks": [c.__dict__ for c in checks], "passed": passed})
        return 0 if passed else 3
    passed = all(c.passed for c in checks)
    lines = header + [c.line() for c in checks] + [f"{sum(c.passed for c in checks)}/{len(checks)} passed"]
    _emit(args, lines, {"checks": [c.__dict__ for c in checks], "passed": passed})
    return 0 if passed else 3


def _cmd_lambda(args):
    if args.max_j < 0:
        raise UsageError("--max must be nonnegative")
    table = lambda_table(args.max_j)
    cells = [r for row in table for r in row]
    payload = {"cells": [{"i": str(r.i), "j": str(r.j), "mu": str(r.mu), "coeff": str(r.coeff), "agree": r.agree} for r in cells]}
    lines = format_lambda_table(table, args.max_j)
    mismatches = [r for r in cells if not r.agree]
    for r in mismatches:
        lines.append(f"MISMATCH i={r.i} j={r.j}: mu={r.mu}, coefficient={r.coeff}")
    _emit(args, lines, payload)
    return 0


COMMANDS = {
    "mobius": _cmd_mobius,
    "zeta-power": _cmd_zeta_power,
    "interval": _cmd_interval,
    "embeddings": _cmd_embeddings,
    "series": _cmd_series,
    "automaton": _cmd_automaton,
    "genfun": _cmd_genfun,
    "verify": _cmd_verify,
    "lambda": _cmd_lambda,
}


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except NotRootedForestError as exc:
        print(f"unsupported poset: {exc}", file=sys.stderr)
        return 2
    except (PosetError, ValueError, ArithmeticError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
