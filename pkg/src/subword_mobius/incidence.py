"""Incidence-algebra computations on intervals of P*.

Everything here is exact and brute force: intervals are enumerated from
dominated subwords, and the Möbius function is computed by its defining
recursion.  :func:`mobius_normal` is the formula side and is checked against
:class:`IntervalCache.mobius`.
"""

from __future__ import annotations

from itertools import product

from .poset import BOTTOM, NotRootedForestError
from .words import defect, leq_words, normal_embeddings


class IntervalCache:
    """Memoized intervals and Möbius values for one fixed poset.

    Not thread safe; use one cache per thread.
    """

    def __init__(self, poset):
        self.poset = poset
        self._below = {}
        self._mu = {}
        self._interval = {}

    def below(self, w):
        """All v <= w, sorted by length then lexicographically."""
        w = tuple(w)
        hit = self._below.get(w)
        if hit is None:
            choices = [(BOTTOM,) + self.poset.down_set(b) for b in w]
            found = {tuple(x for x in pick if x != BOTTOM) for pick in product(*choices)}
            hit = sorted(found, key=lambda v: (len(v), v))
            self._below[w] = hit
        return hit

    def interval(self, u, w):
        u, w = tuple(u), tuple(w)
        key = (u, w)
        hit = self._interval.get(key)
        if hit is None:
            if len(u) > len(w) or not leq_words(u, w, self.poset):
                hit = []
            else:
                hit = [v for v in self.below(w) if len(v) >= len(u) and leq_words(u, v, self.poset)]
            self._interval[key] = hit
        return hit

    def mobius(self, u, w):
        u, w = tuple(u), tuple(w)
        key = (u, w)
        hit = self._mu.get(key)
        if hit is not None:
            return hit
        if u == w:
            value = 1
        elif not leq_words(u, w, self.poset):
            value = 0
        else:
            # values are filled in length order, so the recursion stays shallow
            value = 0
            for v in self.interval(u, w):
                if v != w:
                    value -= self.mobius(u, v)
        self._mu[key] = value
        return value

    def mobius_from(self, u, ws):
        """μ(u, w) for every w in ``ws`` that lies above ``u``."""
        return {tuple(w): self.mobius(u, w) for w in ws}

    def zeta_power(self, u, w, m):
        """Number of multichains u = v0 <= v1 <= ... <= vm = w."""
        u, w = tuple(u), tuple(w)
        if m == 0:
            return int(u == w)
        members = self.interval(u, w)
        if not members:
            return 0
        # counts[v] = number of length-k multichains from u ending at v
        counts = {v: int(v == u) for v in members}
        for _ in range(m):
            counts = {
                v: sum(c for x, c in counts.items() if c and len(x) <= len(v) and leq_words(x, v, self.poset))
                for v in members
            }
        return counts[w]


def interval(u, w, poset, cache=None):
    return (cache or IntervalCache(poset)).interval(u, w)


def mobius_oracle(u, w, poset, cache=None):
    return (cache or IntervalCache(poset)).mobius(u, w)


def mobius_normal(u, w, poset):
    """Signed count of normal embeddings; only valid for rooted forests."""
    if not poset.is_rooted_forest:
        raise NotRootedForestError(
            f"no Möbius formula for {poset!r}: it is not a rooted forest (use the oracle)"
        )
    return sum((-1) ** defect(e, poset) for e in normal_embeddings(u, w, poset))


def zeta_power(u, w, m, poset, cache=None):
    if m < 0:
        raise ValueError("m must be nonnegative")
    return (cache or IntervalCache(poset)).zeta_power(u, w, m)


def convolution_check(u, w, poset, method="oracle", cache=None):
    """Check sum over u <= v <= w of ζ(u,v) μ(v,w) against the delta function."""
    cache = cache or IntervalCache(poset)
    if method == "oracle":
        mu = cache.mobius
    elif method == "normal":
        def mu(v, x):
            return mobius_normal(v, x, poset)
    else:
        raise ValueError(f"unknown method {method!r}")
    total = sum(mu(v, w) for v in cache.interval(u, w))
    return total == int(tuple(u) == tuple(w))


class DownSetTable:
    """ζ, μ and ζ^m restricted to a finite set of words closed under going down.

    Every interval [u, w] with w in the set lies inside it, so values are
    exact.  The strict-below lists are built once by pairwise comparison.
    """

    def __init__(self, poset, words):
        self.poset = poset
        self.words = sorted({tuple(w) for w in words}, key=lambda v: (len(v), v))
        self.index = {w: i for i, w in enumerate(self.words)}
        self.below = []
        for i, w in enumerate(self.words):
            self.below.append(
                [j for j in range(i) if len(self.words[j]) <= len(w) and leq_words(self.words[j], w, poset)]
            )
        self._mu_rows = {}

    def mobius_row(self, u):
        """List of μ(u, w) aligned with ``self.words``.

        A word outside the (down-closed) set lies below none of its members,
        so its row is identically zero.
        """
        u = tuple(u)
        if u not in self.index:
            return [0] * len(self.words)
        row = self._mu_rows.get(u)
        if row is None:
            start = self.index[u]
            row = [0] * len(self.words)
            row[start] = 1
            for i in range(start + 1, len(self.words)):
                if leq_words(u, self.words[i], self.poset):
                    row[i] = -sum(row[j] for j in self.below[i])
            self._mu_rows[u] = row
        return row

    def zeta_power_row(self, u, m):
        u = tuple(u)
        row = [int(w == u) for w in self.words]
        for _ in range(m):
            row = [row[i] + sum(row[j] for j in self.below[i]) for i in range(len(self.words))]
        return row

    def zeta_row(self, u):
        return [int(leq_words(u, w, self.poset)) for w in self.words]
