"""Words over a poset and the generalized subword order.

A word is a plain tuple of element ids.  Embeddings are tuples of the same
length as the target, with :data:`~subword_mobius.poset.BOTTOM` off the
support.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .poset import BOTTOM, NotRootedForestError, PosetError

EMPTY = ()


def parse_word(text, poset):
    """Comma separated element names; the empty string is the empty word."""
    text = text.strip()
    if not text:
        return EMPTY
    return tuple(poset.element(part.strip()) for part in text.split(","))


def format_word(word, poset, empty="ε"):
    if not word:
        return empty
    return ",".join(poset.names[a] for a in word)


def compact(word, poset, empty="ε"):
    """Concatenated names when every name is a single character, e.g. ``2211133``."""
    if not word:
        return empty
    names = [poset.names[a] for a in word]
    if all(len(x) == 1 for x in names):
        return "".join(names)
    return ",".join(names)


def norm(word, poset):
    if poset.weights is None:
        raise PosetError("norm is only defined for chains")
    return sum(poset.weights[a] for a in word)


def word_type(word, size):
    counts = [0] * size
    for a in word:
        counts[a] += 1
    return tuple(counts)


def all_words(poset, max_length, min_length=0):
    for length in range(min_length, max_length + 1):
        yield from product(range(poset.size), repeat=length)


def words_of_norm(poset, total):
    """All words over a chain with the given norm."""
    out = []

    def extend(prefix, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for a in range(poset.size):
            if poset.weights[a] <= remaining:
                prefix.append(a)
                extend(prefix, remaining - poset.weights[a])
                prefix.pop()

    extend([], total)
    return out


@dataclass(frozen=True)
class Embedding:
    target: tuple
    entries: tuple

    @property
    def support(self):
        return tuple(i for i, e in enumerate(self.entries) if e != BOTTOM)

    @property
    def word(self):
        return tuple(e for e in self.entries if e != BOTTOM)

    def defect(self, poset):
        return defect(self, poset)

    def format(self, poset, zero="0"):
        parts = [zero if e == BOTTOM else poset.names[e] for e in self.entries]
        if all(len(p) == 1 for p in parts):
            return "".join(parts)
        return ",".join(parts)


def rightmost_embedding(u, w, poset):
    """Greedy right-to-left placement; ``None`` when ``u`` is not below ``w``."""
    entries = [BOTTOM] * len(w)
    i = len(w) - 1
    for j in range(len(u) - 1, -1, -1):
        while i >= 0 and not poset.leq[u[j]][w[i]]:
            i -= 1
        if i < 0:
            return None
        entries[i] = u[j]
        i -= 1
    return Embedding(tuple(w), tuple(entries))


def leq_words(u, w, poset):
    i = len(w) - 1
    for j in range(len(u) - 1, -1, -1):
        while i >= 0 and not poset.leq[u[j]][w[i]]:
            i -= 1
        if i < 0:
            return False
        i -= 1
    return True


def all_embeddings(u, w, poset):
    out = []
    n, l = len(w), len(u)
    entries = [BOTTOM] * n

    def place(i, j):
        if j == l:
            out.append(Embedding(tuple(w), tuple(entries)))
            return
        if n - i < l - j:
            return
        if poset.leq[u[j]][w[i]]:
            entries[i] = u[j]
            place(i + 1, j + 1)
            entries[i] = BOTTOM
        place(i + 1, j)

    place(0, 0)
    return out


def runs(w):
    """Maximal constant blocks as ``(letter, (r, t))`` with 1-based inclusive ends."""
    out = []
    start = 0
    for i in range(1, len(w) + 1):
        if i == len(w) or w[i] != w[start]:
            out.append((w[start], (start + 1, i)))
            start = i
    return out


def _require_forest(poset):
    if not poset.is_rooted_forest:
        raise NotRootedForestError(f"{poset!r} is not a rooted forest")


def is_normal(emb, poset):
    """Check both normality conditions directly from the run decomposition."""
    _require_forest(poset)
    w, eta = emb.target, emb.entries
    for i, e in enumerate(eta):
        if e not in (w[i], poset.parent(w[i]), BOTTOM):
            return False
    minimal = set(poset.minimal)
    for letter, (r, t) in runs(w):
        if letter in minimal:
            if any(eta[i - 1] == BOTTOM for i in range(r + 1, t + 1)):
                return False
        elif eta[r - 1] == BOTTOM:
            return False
    return True


def normal_embeddings(u, w, poset):
    """All normal embeddings of ``u`` into ``w``; needs a rooted forest.

    Backtracks left to right.  A position left off the support must start its
    run when its letter is minimal, and must continue a run otherwise.
    """
    _require_forest(poset)
    n, l = len(w), len(u)
    minimal = [not poset.lower_covers[a] for a in range(poset.size)]
    out = []
    entries = [BOTTOM] * n

    def place(i, j):
        if j == l and i == n:
            out.append(Embedding(tuple(w), tuple(entries)))
            return
        if n - i < l - j:
            return
        starts_run = i == 0 or w[i - 1] != w[i]
        if minimal[w[i]] == starts_run:
            place(i + 1, j)
        if j < l:
            a = u[j]
            if a == w[i] or a == poset.parent(w[i]):
                entries[i] = a
                place(i + 1, j + 1)
                entries[i] = BOTTOM

    place(0, 0)
    return out


def defect(emb, poset):
    """Number of positions ``i`` with ``entries[i]`` equal to the parent of ``w[i]``.

    Off-support positions over minimal letters count, since there the entry
    is BOTTOM, which is the parent of a minimal letter.
    """
    _require_forest(poset)
    return sum(1 for e, b in zip(emb.entries, emb.target) if e == poset.parent(b))
