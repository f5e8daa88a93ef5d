"""Truncated power series in noncommuting poset letters.

A series keeps every word whose grade is at most ``bound``.  The grade of a
word is the sum of its letter weights: all ones for length grading, the
integer values of a chain for norm grading.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poset import NotRootedForestError, PosetError, make_chain
from .words import compact


class GradingMismatch(ValueError):
    pass


def letter_weights(poset, grading):
    if grading == "length":
        return (1,) * poset.size
    if grading == "norm":
        if poset.weights is None:
            raise PosetError("norm grading needs a chain poset")
        return tuple(poset.weights)
    raise ValueError(f"unknown grading {grading!r}")


class NCSeries:
    """Immutable truncated series; ``coeffs`` maps word tuples to ints."""

    __slots__ = ("coeffs", "weights", "bound", "grading")

    def __init__(self, coeffs, weights, bound, grading="length"):
        self.weights = tuple(weights)
        self.bound = bound
        self.grading = grading
        self.coeffs = {w: c for w, c in coeffs.items() if c and self.grade(w) <= bound}

    # construction helpers

    @classmethod
    def zero(cls, poset, grading, bound):
        return cls({}, letter_weights(poset, grading), bound, grading)

    @classmethod
    def one(cls, poset, grading, bound):
        return cls({(): 1}, letter_weights(poset, grading), bound, grading)

    @classmethod
    def letters(cls, elements, poset, grading, bound):
        """Sum of the given letters; an empty set gives the zero series."""
        return cls({(a,): 1 for a in elements}, letter_weights(poset, grading), bound, grading)

    def like(self, coeffs):
        return NCSeries(coeffs, self.weights, self.bound, self.grading)

    def grade(self, word):
        return sum(self.weights[a] for a in word)

    # algebra

    def _check(self, other):
        if (self.weights, self.bound, self.grading) != (other.weights, other.bound, other.grading):
            raise GradingMismatch("series have different grading or bound")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return self.like(out)

    def __neg__(self):
        return self.like({w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return self.like({w: c * x for w, x in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out = {}
        right = [(v, d, self.grade(v)) for v, d in other.coeffs.items()]
        for w, c in self.coeffs.items():
            room = self.bound - self.grade(w)
            for v, d, g in right:
                if g <= room:
                    key = w + v
                    out[key] = out.get(key, 0) + c * d
        return self.like(out)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (self.weights, self.bound, self.grading, self.coeffs) == (
            other.weights,
            other.bound,
            other.grading,
            other.coeffs,
        )

    def __getitem__(self, word):
        return self.coeffs.get(tuple(word), 0)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"NCSeries({len(self.coeffs)} terms, {self.grading} <= {self.bound})"

    @property
    def constant(self):
        return self.coeffs.get((), 0)

    def star(self):
        """ε + f + f² + ...; stops once the next power is beyond the bound."""
        if self.constant:
            raise ValueError("star needs a series without constant term")
        acc = self.like({(): 1})
        power = acc
        while True:
            power = power * self
            if not power.coeffs:
                return acc
            acc = acc + power

    def plus(self):
        return self.star() - self.like({(): 1})

    def substitute(self, images):
        """Apply the continuous multiplicative map sending letter a to ``images[a]``.

        Every image must lack a constant term and have grade at least the grade
        of its letter, so truncating the result is exact.
        """
        one = self.like({(): 1})
        out = self.like({})
        cache = {(): one}

        def image(word):
            hit = cache.get(word)
            if hit is None:
                hit = image(word[:-1]) * images[word[-1]]
                cache[word] = hit
            return hit

        for w, c in sorted(self.coeffs.items(), key=lambda item: len(item[0])):
            out = out + image(w).scale(c)
        return out

    def lines(self, poset):
        """``coef*word`` lines sorted by grade, then lexicographically."""
        items = sorted(self.coeffs.items(), key=lambda item: (self.grade(item[0]), item[0]))
        return [f"{c}*{compact(w, poset)}" for w, c in items]


# builders


def z_builder(a, poset, grading="length", bound=6):
    """I_a J_a^*: the factor recording one letter of u in its rightmost embedding."""
    up = NCSeries.letters(poset.upper_ideal(a), poset, grading, bound)
    rest = NCSeries.letters(poset.complement_ideal(a), poset, grading, bound)
    return up * rest.star()


def _require_forest(poset):
    if not poset.is_rooted_forest:
        raise NotRootedForestError(f"{poset!r} is not a rooted forest")


def root_prefix(poset, grading="length", bound=6):
    """(ε + Σ_{o minimal} o⁺)^{-1}.

    Signed sum over words in the minimal letters with no two equal neighbours.
    With a single minimal letter o this is ε - o.
    """
    _require_forest(poset)
    pluses = NCSeries.zero(poset, grading, bound)
    for o in poset.minimal:
        pluses = pluses + NCSeries.letters([o], poset, grading, bound).plus()
    return (-pluses).star()


def m_builder(a, poset, grading="length", bound=6, form="validated"):
    """Multiplicative Möbius factor for letter ``a`` of a rooted forest.

    ``form="validated"`` gives (a⁺ - Σ_{c covers a} c⁺)·R with R the
    :func:`root_prefix`.  ``form="displayed"`` uses ε - O_P in place of R (and
    a in place of a⁺R for minimal a); the two agree when P has one minimal
    element and differ otherwise.
    """
    _require_forest(poset)

    def plus_of(x):
        return NCSeries.letters([x], poset, grading, bound).plus()

    covers = NCSeries.zero(poset, grading, bound)
    for c in poset.upper_covers[a]:
        covers = covers + plus_of(c)
    if form == "validated":
        return (plus_of(a) - covers) * root_prefix(poset, grading, bound)
    if form == "displayed":
        tail = NCSeries.one(poset, grading, bound) - NCSeries.letters(poset.minimal, poset, grading, bound)
        if a in poset.minimal:
            return NCSeries.letters([a], poset, grading, bound) - covers * tail
        return (plus_of(a) - covers) * tail
    raise ValueError(f"unknown form {form!r}")


def _product(factors, start):
    out = start
    for f in factors:
        out = out * f
    return out


def series_Z(u, poset, grading="length", bound=6):
    """Σ_w ζ(u, w) w, as P^* z(u(1)) ... z(u(l))."""
    alphabet = NCSeries.letters(range(poset.size), poset, grading, bound)
    cache = {}
    for a in set(u):
        cache[a] = z_builder(a, poset, grading, bound)
    return _product((cache[a] for a in u), alphabet.star())


def series_M(u, poset, grading="length", bound=6, form="validated"):
    """Signed normal-embedding counts Σ_w (Σ_η (-1)^d(η)) w.

    ``form="validated"`` is R·m(u); ``form="displayed"`` is (ε - O_P)·m(u)
    built from the displayed factors.  Only the first matches the Möbius
    function on forests with several roots.
    """
    _require_forest(poset)
    if form == "validated":
        start = root_prefix(poset, grading, bound)
    else:
        start = NCSeries.one(poset, grading, bound) - NCSeries.letters(poset.minimal, poset, grading, bound)
    cache = {a: m_builder(a, poset, grading, bound, form) for a in set(u)}
    return _product((cache[a] for a in u), start)


def series_M_via_z(u, poset, grading="length", bound=6):
    """(ε - O_P)·z(u): the literal transcription with z in place of m."""
    start = NCSeries.one(poset, grading, bound) - NCSeries.letters(poset.minimal, poset, grading, bound)
    return _product((z_builder(a, poset, grading, bound) for a in u), start)


@dataclass
class IdentityCheck:
    name: str
    passed: bool
    first_mismatch: tuple | None = None  # (word, got, expected)


@dataclass
class TelescopingReport:
    n: int
    grading: str
    bound: int
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def lines(self, poset=None):
        poset = poset or make_chain(self.n)
        out = [f"telescoping n={self.n} grading={self.grading} bound={self.bound}"]
        for c in self.checks:
            if c.passed:
                out.append(f"  PASS {c.name}")
            else:
                w, got, want = c.first_mismatch
                out.append(f"  FAIL {c.name}: coefficient of {compact(w, poset)} is {got}, expected {want}")
        return out


def _first_mismatch(got, expected):
    for w in sorted(set(got.coeffs) | set(expected.coeffs), key=lambda w: (got.grade(w), w)):
        if got[w] != expected[w]:
            return (w, got[w], expected[w])
    return None


def verify_telescoping(n=8, grading="norm", bound=8, ks=None):
    """Check (ε-1)·m(P)^* = ε and m(z(k)) = k inside [n]*.

    Under norm grading with n >= bound the chain [n] agrees with the positive
    integers on every word in range, so the check is exact.
    """
    P = make_chain(n)
    one = NCSeries.one(P, grading, bound)
    letter = {a: NCSeries.letters([a], P, grading, bound) for a in range(P.size)}
    m = {a: m_builder(a, P, grading, bound) for a in range(P.size)}
    report = TelescopingReport(n, grading, bound)

    m_all = NCSeries.zero(P, grading, bound)
    for a in range(P.size):
        m_all = m_all + m[a]
    lhs = (one - letter[0]) * m_all.star()
    bad = _first_mismatch(lhs, one)
    report.checks.append(IdentityCheck("(ε-1)·m(P)^* = ε", bad is None, bad))

    weights = letter_weights(P, grading)
    if ks is None:
        ks = [k for k in range(1, n + 1) if weights[k - 1] <= bound]
    for k in ks:
        got = z_builder(k - 1, P, grading, bound).substitute(m)
        bad = _first_mismatch(got, letter[k - 1])
        report.checks.append(IdentityCheck(f"m(z({k})) = {k}", bad is None, bad))
    return report
