"""Exact univariate polynomials and rational functions over the integers."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Integer polynomial, coefficients in ascending powers; zero is ``()``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, degree, coef=1):
        return cls([0] * degree + [coef])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial([other])
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        other = _poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = Polynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other):
        """self(other(x))."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    @property
    def content(self):
        return reduce(gcd, self.coeffs, 0)

    def primitive(self):
        """Divide by the content; leading coefficient made positive."""
        c = self.content
        if c == 0:
            return self
        if self.coeffs[-1] < 0:
            c = -c
        return Polynomial(x // c for x in self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)


def _poly(x):
    return x if isinstance(x, Polynomial) else Polynomial([x])


def _divmod_q(a, b):
    """Division over Q on Fraction coefficient lists (ascending)."""
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = Fraction(a[-1]) / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def poly_gcd(p, q):
    """Primitive gcd with positive leading coefficient."""
    a, b = p.primitive(), q.primitive()
    while b:
        _, r = _divmod_q(a.coeffs, b.coeffs)
        den = reduce(lambda x, y: x * y // gcd(x, y), (Fraction(c).denominator for c in r), 1)
        a, b = b, Polynomial(int(c * den) for c in r).primitive()
    return a.primitive() if a else Polynomial()


def exact_div(p, q):
    """Quotient of an exact division; the result must have integer coefficients."""
    quo, rem = _divmod_q(p.coeffs, q.coeffs)
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    den = reduce(lambda x, y: x * y // gcd(x, y), (Fraction(c).denominator for c in quo), 1)
    if den != 1:
        raise ArithmeticError("quotient has non-integer coefficients")
    return Polynomial(int(c) for c in quo)


class RationalFn:
    """num/den in lowest terms over Q, scaled to coprime integer coefficients,
    with positive constant term in the denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _poly(num), _poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if not num:
            self.num, self.den = Polynomial(), Polynomial([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            # g is primitive, so both quotients are integral (Gauss's lemma)
            num, den = exact_div(num, g), exact_div(den, g)
        c = gcd(num.content, den.content)
        if den[0] < 0:
            c = -c
        self.num = Polynomial(x // c for x in num.coeffs)
        self.den = Polynomial(x // c for x in den.coeffs)

    @classmethod
    def x(cls):
        return cls(Polynomial([0, 1]))

    def __eq__(self, other):
        if isinstance(other, (int, Polynomial)):
            other = RationalFn(other)
        return isinstance(other, RationalFn) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _rat(other)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_rat(other))

    def __rsub__(self, other):
        return _rat(other) - self

    def __mul__(self, other):
        other = _rat(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rat(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        num, den = self.num * other.den, self.den * other.num
        if den[0] == 0:
            raise ValueError("quotient is not a power series at 0")
        return RationalFn(num, den)

    def __rtruediv__(self, other):
        return _rat(other) / self

    def __pow__(self, e):
        if e < 0:
            return RationalFn(1) / self ** (-e)
        return RationalFn(self.num ** e, self.den ** e)

    def taylor(self, degree):
        """First ``degree + 1`` power series coefficients (must be integers)."""
        d0 = self.den[0]
        out = []
        for k in range(degree + 1):
            acc = self.num[k] - sum(self.den[j] * out[k - j] for j in range(1, min(k, self.den.degree) + 1))
            if acc % d0:
                raise ArithmeticError("power series has non-integer coefficients")
            out.append(acc // d0)
        return out

    def __repr__(self):
        return f"RationalFn({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        return format_ratfn(self)


def _rat(x):
    return x if isinstance(x, RationalFn) else RationalFn(x)


def format_poly(p, var="x"):
    """Ascending powers, e.g. ``1 - 2x + x^3``."""
    if not p.coeffs:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + ("" if k == 1 else f"^{k}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def format_ratfn(f, var="x"):
    if f.den == Polynomial([1]):
        return format_poly(f.num, var)
    return f"({format_poly(f.num, var)}) / ({format_poly(f.den, var)})"
