from itertools import product

import pytest

from subword_mobius import genfun
from subword_mobius.genfun import (
    M_len,
    M_len_general,
    M_norm,
    X,
    Z_len,
    Z_len_general,
    Z_norm,
    abar_norm,
    binom,
    closed_am_bm_len,
    closed_am_bm_norm,
    d_norm,
    f_iterate,
    verify_sum_identity,
    zeta_power_genfun,
)
from subword_mobius.incidence import DownSetTable
from subword_mobius.poset import Poset, make_antichain, make_chain, make_forest, make_lambda
from subword_mobius.ratfn import Polynomial, RationalFn
from subword_mobius.words import all_words


def length_sums(table, row, degree):
    sums = [0] * (degree + 1)
    for w, v in zip(table.words, row):
        if len(w) <= degree:
            sums[len(w)] += v
    return sums


def test_binomial_conventions():
    assert binom(-1, 0) == 1
    assert binom(-3, 2) == 0
    assert binom(3, -1) == 0
    assert binom(2, 3) == 0
    assert binom(5, 2) == 10


def test_small_closed_forms():
    assert Z_norm((0,), 1) == 1 / (1 - X)
    assert M_len((0, 0, 0), 3) == 1 - X
    assert M_len((1, 0, 0), 3) == 0
    assert M_norm((1, 0), 2) == X * (1 - X) / (1 + X)


def test_M_norm_example_against_oracle():
    P = make_chain(2)
    from subword_mobius.words import norm, words_of_norm

    ws = [w for N in range(9) for w in words_of_norm(P, N)]
    table = DownSetTable(P, ws)
    sums = [0] * 9
    for w, mu in zip(table.words, table.mobius_row((0,))):
        sums[norm(w, P)] += mu
    assert M_norm((1, 0), 2).taylor(8) == sums


def test_top_letter_length_series_is_not_zero():
    # Σ_{ℓ(w)=1} μ(3, w) = 1 and Σ_{ℓ(w)=2} μ(3, w) = -1 in [3]*
    assert M_len((0, 0, 1), 3).taylor(3) == [0, 1, -1, 0]


def test_general_reduces_to_chain():
    C = make_chain(3)
    for tv in product(range(3), repeat=3):
        assert Z_len_general(C, tv) == Z_len(tv, 3)
        assert M_len_general(C, tv) == M_len(tv, 3)


def test_general_antichain_empty_word():
    for q in (1, 2, 4):
        assert Z_len_general(make_antichain(q), (0,) * q) == 1 / (1 - q * X)


def test_single_cover_kills_M():
    T = Poset(list("rxyz"), [(0, 1), (0, 2), (1, 3)])
    # x is covered only by z
    assert M_len_general(T, (0, 1, 0, 0)) == 0
    assert M_len_general(T, (1, 0, 0, 0)) != 0


@pytest.mark.parametrize(
    "poset",
    [make_antichain(2), make_forest(2, 1), Poset(list("rxyz"), [(0, 1), (0, 2), (1, 3)]), make_lambda()],
    ids=["antichain", "forest", "tree", "lambda"],
)
def test_general_length_series_match_oracle(poset):
    L = 4
    table = DownSetTable(poset, list(all_words(poset, L)))
    for tv in product(range(3), repeat=poset.size):
        if sum(tv) > 2:
            continue
        u = tuple(a for a, l in enumerate(tv) for _ in range(l))
        assert Z_len_general(poset, tv).taylor(L) == length_sums(table, table.zeta_row(u), L)
        if poset.is_rooted_forest:
            assert M_len_general(poset, tv).taylor(L) == length_sums(table, table.mobius_row(u), L)


def test_f_iterate_examples():
    assert f_iterate(2, "norm", 0) == (X, X**2)
    assert f_iterate(2, "length", 0) == (X, X)
    a1, b1 = f_iterate(2, "norm", 1)
    assert a1 == X + X**2 and b1 == X**2 / (1 - X)
    a1, b1 = f_iterate(2, "length", 1)
    assert a1 == 2 * X and b1 == X / (1 - X)


def test_zeta_power_genfun_examples():
    assert zeta_power_genfun((1, 2), 2, 0, "norm") == X * X**4
    assert zeta_power_genfun((0, 0), 2, 2, "norm").taylor(1)[1] == 2
    assert zeta_power_genfun((0, 0), 2, 1, "norm") == Z_norm((0, 0), 2)
    assert zeta_power_genfun((1, 0, 2), 3, 1, "length") == Z_len((1, 0, 2), 3)


def test_closed_form_examples():
    assert closed_am_bm_norm(0) == (X, X**2)
    assert abar_norm(0) == Polynomial([1]) and d_norm(0) == Polynomial([1]) and d_norm(1) == Polynomial([1])
    assert closed_am_bm_norm(1) == (X * (1 + X), X**2 / (1 - X))
    assert abar_norm(1) == Polynomial([1, 1]) and d_norm(2) == Polynomial([1, -1])
    assert closed_am_bm_len(1) == (2 * X, X / (1 - X))
    assert genfun.abar_len(1) == Polynomial([2]) and genfun.d_len(2) == Polynomial([1, -1])


@pytest.mark.parametrize("m", range(7))
def test_closed_forms_equal_recurrence(m):
    assert closed_am_bm_norm(m) == f_iterate(2, "norm", m)
    assert closed_am_bm_len(m) == f_iterate(2, "length", m)


def test_sum_identity_small():
    assert verify_sum_identity(0, 0) == (1, 1)
    for m in range(1, 8):
        lhs, rhs = verify_sum_identity(m, 1)
        assert lhs == rhs + 1
        for k in (0, 2, 3, 4, 5):
            lhs, rhs = verify_sum_identity(m, k)
            assert lhs == rhs


def test_closed_form_coefficients_are_integers():
    for m in range(13):
        for i in range(m + 2):
            assert isinstance(genfun.alpha_coef(m, i), int)
            assert isinstance(genfun.delta_coef(m, i), int)


def test_type_vector_checked():
    with pytest.raises(ValueError):
        Z_norm((1, 0), 3)
    assert isinstance(M_norm((0, 0, 0), 3), RationalFn)
