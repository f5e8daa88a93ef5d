"""Verification routines returning pass/fail checks for the CLI and the tests."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import genfun
from .automata import accept_series, build_M_automaton
from .incidence import DownSetTable, IntervalCache, mobius_normal
from .ncseries import series_M, series_M_via_z, verify_telescoping
from .poset import make_antichain, make_chain, make_forest
from .ratfn import Polynomial, format_ratfn
from .words import all_words, compact


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self):
        tail = f": {self.detail}" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}{tail}"


def closed_form_checks(max_m=12):
    checks = []
    for m in range(max_m + 1):
        for grading, closed in (("norm", genfun.closed_am_bm_norm), ("length", genfun.closed_am_bm_len)):
            got = closed(m)
            want = genfun.f_iterate(2, grading, m)
            ok = tuple(got) == tuple(want)
            detail = "" if ok else f"closed {got} vs recurrence {want}"
            checks.append(Check(f"closed a_{m}, b_{m} ({grading})", ok, detail))
    x = Polynomial([0, 1])
    for m in range(1, max_m + 1):
        p = x * genfun.abar_norm(m - 1) + genfun.d_norm(m + 1) - genfun.d_norm(m - 1)
        checks.append(Check(f"x·abar_{m - 1} + d_{m + 1} - d_{m - 1} = 0", not p, "" if not p else str(p)))
    return checks


def sum_identity_checks(max_m=12, max_k=12):
    checks = []
    for m in range(max_m + 1):
        for k in range(max_k + 1):
            lhs, rhs = genfun.verify_sum_identity(m, k)
            want = rhs + 1 if k == 1 else rhs
            rel = "lhs = rhs + 1" if k == 1 else "lhs = rhs"
            checks.append(Check(f"m={m} k={k} {rel}", lhs == want, f"lhs={lhs} rhs={rhs}"))
    return checks


def mobius_agreement(poset, max_length):
    """Compare the normal-embedding formula with the recursion on every pair u <= w."""
    cache = IntervalCache(poset)
    pairs = 0
    for w in all_words(poset, max_length):
        for u in cache.below(w):
            pairs += 1
            mu = cache.mobius(u, w)
            nm = mobius_normal(u, w, poset)
            if mu != nm:
                return Check(
                    f"normal = oracle on {poset!r}, len(w) <= {max_length}",
                    False,
                    f"u={compact(u, poset)} w={compact(w, poset)}: normal {nm}, oracle {mu}",
                )
    return Check(f"normal = oracle on {poset!r}, len(w) <= {max_length}", True, f"{pairs} pairs")


def oracle_suite():
    return [
        mobius_agreement(make_chain(3), 5),
        mobius_agreement(make_antichain(2), 6),
        mobius_agreement(make_forest(2, 2), 4),
    ]


@dataclass
class Discrepancy:
    displayed: str
    validated: str
    displayed_ok: bool
    validated_ok: bool
    witness: str

    def lines(self):
        return [
            f"displayed: {self.displayed}  [{'agrees' if self.displayed_ok else 'DISAGREES'} with oracle]",
            f"validated: {self.validated}  [{'agrees' if self.validated_ok else 'DISAGREES'} with oracle]",
            f"witness:   {self.witness}",
        ]


def _series_vs_oracle(series_fn, poset, max_length, words_u):
    """First (u, w, got, want) where a series coefficient differs from μ."""
    table = DownSetTable(poset, list(all_words(poset, max_length)))
    for u in words_u:
        s = series_fn(u)
        for w, mu in zip(table.words, table.mobius_row(u)):
            if s[w] != mu:
                return u, w, s[w], mu
    return None


def _ratfn_vs_oracle(f_of_type, poset, max_length, mobius=True, max_total=2):
    table = DownSetTable(poset, list(all_words(poset, max_length)))
    for tv in product(range(max_total + 1), repeat=poset.size):
        if sum(tv) > max_total:
            continue
        u = tuple(a for a, l in enumerate(tv) for _ in range(l))
        row = table.mobius_row(u) if mobius else table.zeta_row(u)
        sums = [0] * (max_length + 1)
        for w, v in zip(table.words, row):
            sums[len(w)] += v
        got = f_of_type(tv).taylor(max_length)
        if got != sums:
            return tv, got, sums
    return None


def discrepancy_report():
    """Displayed closed forms that disagree with brute force, with the forms that agree."""
    out = []
    L = 4

    # M(u) written with z in place of m
    P = make_chain(2)
    words_u = list(all_words(P, 2))
    bad_lit = _series_vs_oracle(lambda u: series_M_via_z(u, P, "length", L), P, L, words_u)
    bad_fix = _series_vs_oracle(lambda u: series_M(u, P, "length", L), P, L, words_u)
    out.append(
        (
            "series M(u) on a rooted forest",
            Discrepancy(
                "M(u) = (ε - O_P) z(u)",
                "M(u) = R m(u), R = (ε + Σ_{o in O_P} o⁺)^{-1}  (R = ε - O_P when |O_P| = 1)",
                bad_lit is None,
                bad_fix is None,
                _witness_series(bad_lit, P),
            ),
        )
    )

    # general m(a) on forests with several roots
    A = make_antichain(2)
    words_u = list(all_words(A, 2))
    bad_lit = _series_vs_oracle(lambda u: series_M(u, A, "length", L, form="displayed"), A, L, words_u)
    bad_fix = _series_vs_oracle(lambda u: series_M(u, A, "length", L), A, L, words_u)
    out.append(
        (
            "factor m(a) on a forest with two roots (antichain {a, b})",
            Discrepancy(
                "m(a) = a - (Σ_{c in C_a} c⁺)(ε - O_P) for minimal a, (a⁺ - Σ c⁺)(ε - O_P) otherwise",
                "m(a) = (a⁺ - Σ_{c in C_a} c⁺) R for every a",
                bad_lit is None,
                bad_fix is None,
                _witness_series(bad_lit, A),
            ),
        )
    )

    # general length generating functions
    F = make_forest(2, 2)
    bad_lit = _ratfn_vs_oracle(lambda tv: genfun.Z_len_general_displayed(F, tv), F, L, mobius=False)
    bad_fix = _ratfn_vs_oracle(lambda tv: genfun.Z_len_general(F, tv), F, L, mobius=False)
    out.append(
        (
            "length generating function of ζ on a general poset",
            Discrepancy(
                "Z(u;t) = 1/(1-|P|t) ∏_a |I_a|t/(1-|J_a|t)",
                "Z(u;t) = 1/(1-|P|t) ∏_a (|I_a|t/(1-|J_a|t))^{l_a}",
                bad_lit is None,
                bad_fix is None,
                _witness_ratfn(bad_lit),
            ),
        )
    )
    bad_lit = _ratfn_vs_oracle(lambda tv: genfun.M_len_general_displayed(F, tv), F, L)
    bad_fix = _ratfn_vs_oracle(lambda tv: genfun.M_len_general(F, tv), F, L)
    out.append(
        (
            "length generating function of μ on a rooted forest",
            Discrepancy(
                "M(u;t) = t^|P| (1-|O_P|t)^{|P-O_P|+1}/(1-t)^|P| ∏_{a in O_P}(1-t-|C_a|(1-|O_P|t)) ∏_{b not in O_P}(1-|C_b|)",
                "M(u;t) = r(t) ∏_a ((1-|C_a|) t/(1+(|O_P|-1)t))^{l_a}, r(t) = (1-t)/(1+(|O_P|-1)t)",
                bad_lit is None,
                bad_fix is None,
                _witness_ratfn(bad_lit),
            ),
        )
    )

    # length generating function of μ on [n]*
    n = 3
    C = make_chain(n)
    bad_lit = _ratfn_vs_oracle(lambda tv: genfun.M_len_displayed(tv, n), C, 5)
    bad_fix = _ratfn_vs_oracle(lambda tv: genfun.M_len(tv, n), C, 5)
    out.append(
        (
            "length generating function of μ on [n]*",
            Discrepancy(
                "M(u;t) = 1 - t if u = ε, 0 otherwise",
                "M(u;t) = (1 - t) t^{l_n} if u uses only the letter n, 0 otherwise",
                bad_lit is None,
                bad_fix is None,
                _witness_ratfn(bad_lit),
            ),
        )
    )

    # automaton for M⊗
    L = 4
    Cp = make_chain(2)
    cache = IntervalCache(Cp)

    def first_bad(aut):
        acc = accept_series(aut, L)
        for w in all_words(Cp, L):
            for u in all_words(Cp, len(w)):
                if acc.get((u, w), 0) != cache.mobius(u, w):
                    return u, w, acc.get((u, w), 0), cache.mobius(u, w)
        return None

    bad_lit = first_bad(build_M_automaton(2, form="displayed"))
    bad_fix = first_bad(build_M_automaton(2))
    out.append(
        (
            "automaton for M⊗",
            Discrepancy(
                "arcs entering b_k (k >= 2) from another vertex read k⊗k",
                "those arcs read (k - (k-1))⊗k",
                bad_lit is None,
                bad_fix is None,
                _witness_series(bad_lit, Cp),
            ),
        )
    )
    return out


def _witness_series(bad, poset):
    if bad is None:
        return "none"
    u, w, got, want = bad
    return f"u={compact(u, poset)} w={compact(w, poset)}: displayed form gives {got}, μ = {want}"


def _witness_ratfn(bad):
    if bad is None:
        return "none"
    tv, got, want = bad
    return f"type {tv}: displayed coefficients {got}, oracle sums {want}"


def discrepancy_checks():
    """Pass when every displayed form fails and every validated form agrees."""
    return [
        Check(title, (not d.displayed_ok) and d.validated_ok, d.witness)
        for title, d in discrepancy_report()
    ]


def telescoping_checks(n=8, grading="norm", bound=8):
    rep = verify_telescoping(n, grading, bound)
    return [Check(c.name, c.passed, "" if c.passed else str(c.first_mismatch)) for c in rep.checks]


__all__ = [
    "Check",
    "closed_form_checks",
    "discrepancy_checks",
    "discrepancy_report",
    "format_ratfn",
    "mobius_agreement",
    "oracle_suite",
    "sum_identity_checks",
    "telescoping_checks",
]
