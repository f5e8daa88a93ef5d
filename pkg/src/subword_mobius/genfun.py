"""Commutative generating functions for ζ, μ and ζ^m on P*.

Norm grading substitutes x^k for the letter k of a chain; length grading
substitutes t for every letter.  Type vectors are tuples ``(l_1, ..., l_n)``
of letter multiplicities, indexed like the poset elements.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .poset import NotRootedForestError, make_chain
from .ratfn import Polynomial, RationalFn

X = RationalFn.x()


def binom(n, k):
    """C(n, k) with C(n, 0) = 1 for every n and 0 when k < 0 or k > n."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    if k > n:
        return 0
    return comb(n, k)


def _prod(factors):
    out = RationalFn(1)
    for f in factors:
        out = out * f
    return out


def _letters(count):
    """A set of `count` letters under length grading."""
    return count * X


def _star(f):
    return 1 / (1 - f)


def _plus(f):
    return f / (1 - f)


# chains [n]


def _check_type(type_vector, n):
    if len(type_vector) != n or any(l < 0 for l in type_vector):
        raise ValueError(f"type vector {type_vector!r} does not fit [{n}]")


def Z_norm(type_vector, n):
    _check_type(type_vector, n)
    out = (1 - X) / (1 - 2 * X + X ** (n + 1))
    for k, l in enumerate(type_vector, start=1):
        out = out * ((X**k - X ** (n + 1)) / (1 - 2 * X + X**k)) ** l
    return out


def M_norm(type_vector, n):
    _check_type(type_vector, n)
    ls = type_vector
    length = sum(ls)
    size = sum(k * l for k, l in enumerate(ls, start=1))
    out = X**size * (1 - X) ** (2 * length + 1) / (1 - X) ** (ls[0] + ls[-1])
    for k in range(2, n + 1):
        out = out / (1 - X**k) ** (ls[k - 2] + ls[k - 1])
    return out


def Z_len(type_vector, n):
    _check_type(type_vector, n)
    out = 1 / (1 - n * X)
    for k, l in enumerate(type_vector, start=1):
        out = out * ((n - k + 1) * X / (1 - (k - 1) * X)) ** l
    return out


def M_len(type_vector, n):
    """(1 - t) t^{l_n} when u only uses the top letter n, else 0.

    The factor for a letter k < n vanishes because k has exactly one cover;
    the top letter has none and contributes t.
    """
    _check_type(type_vector, n)
    if any(type_vector[:-1]):
        return RationalFn(0)
    return (1 - X) * X ** type_vector[-1]


def M_len_displayed(type_vector, n):
    """1 - t for the empty word and 0 otherwise."""
    _check_type(type_vector, n)
    return RationalFn(0) if any(type_vector) else 1 - X


def Z_P_norm(type_vector):
    """Norm generating function in the positive integers (finite product)."""
    out = (1 - X) / (1 - 2 * X)
    for k, l in enumerate(type_vector, start=1):
        if l:
            out = out * (X**k / (1 - 2 * X + X**k)) ** l
    return out


def M_P_norm(type_vector):
    ls = list(type_vector) + [0]
    length = sum(ls)
    size = sum(k * l for k, l in enumerate(ls, start=1))
    out = X**size * (1 - X) ** (2 * length + 1) / (1 - X) ** ls[0]
    for k in range(2, len(ls) + 1):
        e = ls[k - 2] + ls[k - 1]
        if e:
            out = out / (1 - X**k) ** e
    return out


# arbitrary finite posets, length grading


def z_len_factor(poset, a):
    """I_a J_a^* with every letter set to t."""
    return _letters(len(poset.upper_ideal(a))) * _star(_letters(len(poset.complement_ideal(a))))


def root_prefix_len(poset):
    """(1 + |O_P| t/(1-t))^{-1}: the signed words over minimal letters without repeats."""
    return 1 / (1 + len(poset.minimal) * _plus(X))


def m_len_factor(poset, a):
    if not poset.is_rooted_forest:
        raise NotRootedForestError(f"{poset!r} is not a rooted forest")
    return (_plus(X) - len(poset.upper_covers[a]) * _plus(X)) * root_prefix_len(poset)


def Z_len_general(poset, type_vector):
    _check_type(type_vector, poset.size)
    out = _star(_letters(poset.size))
    for a, l in enumerate(type_vector):
        out = out * z_len_factor(poset, a) ** l
    return out


def M_len_general(poset, type_vector):
    if not poset.is_rooted_forest:
        raise NotRootedForestError(f"{poset!r} is not a rooted forest")
    _check_type(type_vector, poset.size)
    out = root_prefix_len(poset)
    for a, l in enumerate(type_vector):
        out = out * m_len_factor(poset, a) ** l
    return out


def Z_len_general_displayed(poset, type_vector):
    """1/(1-|P|t) ∏_a |I_a|t/(1-|J_a|t), every element once, ignoring the type."""
    out = 1 / (1 - poset.size * X)
    for a in range(poset.size):
        out = out * (len(poset.upper_ideal(a)) * X / (1 - len(poset.complement_ideal(a)) * X))
    return out


def M_len_general_displayed(poset, type_vector):
    """The closed form with exponents |P| and |P - O_P| (independent of u)."""
    q = len(poset.minimal)
    out = X**poset.size * (1 - q * X) ** (poset.size - q + 1) / (1 - X) ** poset.size
    for a in poset.minimal:
        out = out * (1 - X - len(poset.upper_covers[a]) * (1 - q * X))
    for b in range(poset.size):
        if b not in poset.minimal:
            out = out * (1 - len(poset.upper_covers[b]))
    return out


# ζ^m on [n]*


def seeds(n, grading):
    if grading == "norm":
        return tuple(X**k for k in range(1, n + 1))
    if grading == "length":
        return (X,) * n
    raise ValueError(f"unknown grading {grading!r}")


def f_step(values):
    n = len(values)
    out = []
    for k in range(n):
        out.append(sum(values[k:], RationalFn(0)) / (1 - sum(values[:k], RationalFn(0))))
    return tuple(out)


def f_iterate(n, grading, m):
    """Images of x_1..x_n under the m-th power of the map x_k -> (x_k+...+x_n)/(1-x_1-...-x_{k-1})."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    values = seeds(n, grading)
    for _ in range(m):
        values = f_step(values)
    return values


def zeta_power_genfun(type_vector, n, m, grading):
    """Σ_w ζ^m(u, w) X^w for any u of the given type."""
    _check_type(type_vector, n)
    values = seeds(n, grading)
    out = RationalFn(1)
    for _ in range(m):
        out = out / (1 - sum(values, RationalFn(0)))
        values = f_step(values)
    for v, l in zip(values, type_vector):
        out = out * v**l
    return out


# closed forms for n = 2


def abar_norm(m):
    return Polynomial((-1) ** (i // 2) * binom((m + i) // 2, i) for i in range(m + 2))


def d_norm(m):
    return Polynomial((-1) ** (-(-i // 2)) * binom((m + i - 1) // 2, i) for i in range(m + 2))


def closed_am_bm_norm(m):
    x = X
    return x * RationalFn(abar_norm(m)) / d_norm(m), x**2 / (RationalFn(d_norm(m)) * d_norm(m + 1))


def _integral(q):
    if q.denominator != 1:
        raise ArithmeticError(f"coefficient {q} is not an integer")
    return int(q)


def alpha_coef(m, i):
    if m % 2 == 0:
        return _integral(Fraction((m + 1) * 2**i, 2 * i + 1) * binom((m + 2 * i) // 2, (m - 2 * i) // 2) if m >= 2 * i else Fraction(0))
    return 2 ** (i + 1) * binom((m + 2 * i + 1) // 2, (m - 2 * i - 1) // 2) if m >= 2 * i + 1 else 0


def delta_coef(m, i):
    if m == 0:
        # 0/0 at i = 0; d_0 = 1 is forced by a_0 = t
        return 1 if i == 0 else 0
    if m % 2 == 0:
        return _integral(Fraction(m * 2**i, m + 2 * i) * binom((m + 2 * i) // 2, (m - 2 * i) // 2) if m >= 2 * i else Fraction(0))
    return 2**i * binom((m + 2 * i - 1) // 2, (m - 2 * i - 1) // 2) if m >= 2 * i + 1 else 0


def abar_len(m):
    return Polynomial((-1) ** i * alpha_coef(m, i) for i in range(m + 2))


def d_len(m):
    return Polynomial((-1) ** i * delta_coef(m, i) for i in range(m + 2))


def closed_am_bm_len(m):
    t = X
    return t * RationalFn(abar_len(m)) / d_len(m), t / (RationalFn(d_len(m)) * d_len(m + 1))


def verify_sum_identity(m, k):
    """Both sides of the binomial identity behind a_m = a_{m-1} + b_{m-1}.

    For k != 1 they agree; for k = 1 and m >= 1 the left side exceeds the
    right by one.  At m = 0, k = 1 both sides vanish.
    """

    def sign(i):
        return (-1) ** (i // 2 + (-(-(k - i) // 2)))

    lhs = sum(sign(i) * binom((m + i) // 2, i) * binom((m + k - i - 2) // 2, k - i) for i in range(k + 1))
    rhs = sum(sign(i) * binom((m + i - 1) // 2, i) * binom((m + k - i - 1) // 2, k - i) for i in range(k + 1))
    return lhs, rhs


def type_of(word, size):
    counts = [0] * size
    for a in word:
        counts[a] += 1
    return tuple(counts)


def chain_of(n):
    return make_chain(n)
