"""Finite posets given by their cover relations.

Elements are the integers ``0..size-1``; ``names`` maps them to display
strings.  The bottom element adjoined in embeddings is :data:`BOTTOM`, which
never belongs to a poset.
"""

from __future__ import annotations

import json
from functools import cached_property
from pathlib import Path

BOTTOM = -1


class PosetError(ValueError):
    """Malformed poset description (unknown names, cycles, bad sizes)."""


class NotRootedForestError(ValueError):
    """Raised when an operation needs a rooted forest and gets something else."""


class Poset:
    """Immutable finite poset.

    ``leq[a][b]`` is the full order relation, precomputed at construction.
    """

    def __init__(self, names, covers, weights=None):
        self.names = tuple(str(n) for n in names)
        if len(set(self.names)) != len(self.names):
            raise PosetError("duplicate element names")
        self.size = len(self.names)
        self.covers = tuple(sorted(set((int(a), int(b)) for a, b in covers)))
        for a, b in self.covers:
            if not (0 <= a < self.size and 0 <= b < self.size):
                raise PosetError(f"cover ({a}, {b}) out of range")
            if a == b:
                raise PosetError(f"cycle in covers at {self.names[a]}")
        # integer letter values, used for norm grading (chains only)
        self.weights = tuple(weights) if weights is not None else None
        self.leq = self._closure()
        self._index = {name: i for i, name in enumerate(self.names)}

    def _closure(self):
        n = self.size
        up = [[] for _ in range(n)]
        for a, b in self.covers:
            up[a].append(b)
        leq = [[False] * n for _ in range(n)]
        for a in range(n):
            stack = [a]
            while stack:
                x = stack.pop()
                if leq[a][x]:
                    continue
                leq[a][x] = True
                stack.extend(up[x])
        for a in range(n):
            for b in range(n):
                if a != b and leq[a][b] and leq[b][a]:
                    raise PosetError(f"cycle in covers through {self.names[a]} and {self.names[b]}")
        return tuple(tuple(row) for row in leq)

    def __repr__(self):
        pairs = ", ".join(f"{self.names[a]}<{self.names[b]}" for a, b in self.covers)
        return f"Poset([{', '.join(self.names)}]; {pairs})"

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.names == other.names
            and self.covers == other.covers
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.names, self.covers, self.weights))

    def element(self, name):
        try:
            return self._index[str(name)]
        except KeyError:
            raise PosetError(f"unknown element {name!r}") from None

    def le(self, a, b):
        """Order in P with BOTTOM adjoined below every element."""
        if a == BOTTOM:
            return True
        if b == BOTTOM:
            return False
        return self.leq[a][b]

    def _strictly_between(self, a, c):
        return any(b != a and b != c and self.leq[a][b] and self.leq[b][c] for b in range(self.size))

    @cached_property
    def upper_covers(self):
        """``upper_covers[a]`` is C_a, computed from the order so redundant input pairs are ignored."""
        return tuple(
            tuple(c for c in range(self.size) if c != a and self.leq[a][c] and not self._strictly_between(a, c))
            for a in range(self.size)
        )

    @cached_property
    def lower_covers(self):
        return tuple(tuple(a for a in range(self.size) if b in self.upper_covers[a]) for b in range(self.size))

    @cached_property
    def minimal(self):
        return tuple(a for a in range(self.size) if not self.lower_covers[a])

    @cached_property
    def is_rooted_forest(self):
        return all(len(low) <= 1 for low in self.lower_covers)

    def upper_ideal(self, a):
        return tuple(c for c in range(self.size) if self.leq[a][c])

    def complement_ideal(self, a):
        return tuple(c for c in range(self.size) if not self.leq[a][c])

    def down_set(self, a):
        return tuple(c for c in range(self.size) if self.leq[c][a])

    def parent(self, a):
        """The unique lower neighbour of ``a`` once BOTTOM is adjoined."""
        if not self.is_rooted_forest:
            raise NotRootedForestError(f"{self!r} is not a rooted forest")
        low = self.lower_covers[a]
        return low[0] if low else BOTTOM

    @property
    def is_chain(self):
        return self.weights is not None

    def to_dict(self):
        return {
            "elements": list(self.names),
            "covers": [[self.names[a], self.names[b]] for a, b in self.covers],
        }


def make_chain(n):
    """The chain 1 < 2 < ... < n; element k has id k-1 and weight k."""
    if n < 1:
        raise PosetError("chain length must be positive")
    return Poset(
        [str(k) for k in range(1, n + 1)],
        [(k, k + 1) for k in range(n - 1)],
        weights=range(1, n + 1),
    )


def make_antichain(q):
    if q < 1:
        raise PosetError("antichain size must be positive")
    names = [chr(ord("a") + i) for i in range(q)] if q <= 26 else [f"a{i}" for i in range(q)]
    return Poset(names, [])


def make_lambda():
    """Three elements a, b, c with a < c and b < c."""
    return Poset(["a", "b", "c"], [(0, 2), (1, 2)])


def make_forest(*chain_lengths):
    """Disjoint union of chains; the roots are the bottoms of the chains."""
    names, covers = [], []
    for t, length in enumerate(chain_lengths):
        if length < 1:
            raise PosetError("chain length must be positive")
        base = len(names)
        names.extend(f"{chr(ord('a') + t)}{k}" for k in range(1, length + 1))
        covers.extend((base + k, base + k + 1) for k in range(length - 1))
    return Poset(names, covers)


def parse_poset(description):
    """Build a poset from ``{"elements": [...], "covers": [[lo, hi], ...]}``.

    ``description`` may be a mapping or JSON text.
    """
    if isinstance(description, (str, bytes)):
        try:
            description = json.loads(description)
        except json.JSONDecodeError as exc:
            raise PosetError(f"invalid poset document: {exc}") from None
    try:
        names = [str(x) for x in description["elements"]]
        raw = description.get("covers", [])
    except (KeyError, TypeError, AttributeError):
        raise PosetError("poset document needs an 'elements' array") from None
    index = {name: i for i, name in enumerate(names)}
    covers = []
    for pair in raw:
        if len(pair) != 2:
            raise PosetError(f"cover {pair!r} is not a pair")
        lo, hi = (str(x) for x in pair)
        for x in (lo, hi):
            if x not in index:
                raise PosetError(f"unknown element {x!r} in cover {pair!r}")
        covers.append((index[lo], index[hi]))
    weights = None
    # chains named 1..n keep their integer values so norm grading works
    if names == [str(k) for k in range(1, len(names) + 1)] and sorted(covers) == [
        (k, k + 1) for k in range(len(names) - 1)
    ]:
        weights = range(1, len(names) + 1)
    return Poset(names, covers, weights=weights)


def load_poset(path):
    return parse_poset(Path(path).read_text())


def resolve_poset(selector):
    """``chain:n``, ``antichain:q``, ``lambda``, ``forest:2,2`` or ``file:path``."""
    kind, _, arg = selector.partition(":")
    try:
        if kind == "chain":
            return make_chain(int(arg))
        if kind == "antichain":
            return make_antichain(int(arg))
        if kind == "lambda" and not arg:
            return make_lambda()
        if kind == "forest":
            return make_forest(*(int(x) for x in arg.split(",")))
        if kind == "file":
            return load_poset(arg)
    except ValueError as exc:
        if isinstance(exc, PosetError):
            raise
        raise PosetError(f"bad poset selector {selector!r}") from None
    raise PosetError(f"bad poset selector {selector!r}")
