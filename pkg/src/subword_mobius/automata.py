"""Weighted automata over pairs of letters accepting Z⊗ and M⊗ for [n]*.

Arc labels are stored expanded: a tuple of ``(coef, x, y)`` monomials where
``x`` and ``y`` are words of length at most one.  Every arc not entering
omega reads exactly one right letter, so the right component of a walk grows
by one per step and acceptance up to a length bound is a finite computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poset import make_chain

ALPHA = "alpha"
OMEGA = "omega"


class AutomatonError(ValueError):
    pass


@dataclass(frozen=True)
class Arc:
    source: str
    target: str
    label: tuple  # ((coef, x, y), ...)


@dataclass(frozen=True)
class Automaton:
    n: int
    vertices: tuple
    arcs: tuple

    def validate(self):
        seen = set()
        for arc in self.arcs:
            key = (arc.source, arc.target)
            if key in seen:
                raise AutomatonError(f"two arcs {arc.source} -> {arc.target}")
            seen.add(key)
            for _, x, y in arc.label:
                if arc.target == OMEGA:
                    if x or y:
                        raise AutomatonError("arcs into omega must read ε⊗ε")
                elif len(y) != 1 or len(x) > 1:
                    raise AutomatonError(f"arc {arc.source} -> {arc.target} must read one right letter")
        return self

    def arc(self, source, target):
        for a in self.arcs:
            if a.source == source and a.target == target:
                return a
        return None

    def dump(self):
        poset = make_chain(self.n)

        def letter(x):
            return poset.names[x[0]] if x else "ε"

        lines = []
        for arc in self.arcs:
            terms = " ".join(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{letter(x)}⊗{letter(y)}" for c, x, y in arc.label)
            lines.append(f"{arc.source} -> {arc.target} : {terms}")
        return lines


def _beta(k):
    return f"b{k}"


def _merge(label):
    """Collect equal monomials and drop zeros, keeping first-seen order."""
    out = {}
    for c, x, y in label:
        out[(x, y)] = out.get((x, y), 0) + c
    return tuple((c, x, y) for (x, y), c in out.items() if c)


def _finish(n, arcs):
    vertices = (ALPHA, *(_beta(k) for k in range(1, n + 1)), OMEGA)
    for v in vertices[:-1]:
        arcs.append(Arc(v, OMEGA, ((1, (), ()),)))
    return Automaton(n, vertices, tuple(arcs)).validate()


def build_Z_automaton(n):
    """Walks trace the rightmost embedding of u in w, one letter of w per step."""
    if n < 1:
        raise ValueError("n must be positive")
    # letter k of [n] has id k-1
    arcs = [Arc(ALPHA, ALPHA, tuple((1, (), (b,)) for b in range(n)))]
    sources = [ALPHA] + [_beta(j) for j in range(1, n + 1)]
    for k in range(1, n + 1):
        step = tuple((1, (k - 1,), (b,)) for b in range(k - 1, n))
        for src in sources:
            if src == _beta(k):
                label = tuple((1, (), (b,)) for b in range(k - 1)) + step
            else:
                label = step
            arcs.append(Arc(src, _beta(k), _merge(label)))
    return _finish(n, arcs)


def build_M_automaton(n, form="validated"):
    """Vertex b_k means the last right letter read was k.

    Entering b_k from another vertex starts a run of k's in w; looping at b_k
    continues one.  A run of k >= 2 must start in the support, with u-letter
    k or k-1, so ``form="validated"`` labels those arcs (k - (k-1))⊗k.
    ``form="displayed"`` uses k⊗k there, which drops the second option and
    disagrees with the Möbius function (for instance at (1, 2)).
    """
    if form not in ("validated", "displayed"):
        raise ValueError(f"unknown form {form!r}")
    if n < 1:
        raise ValueError("n must be positive")
    arcs = []
    sources = [ALPHA] + [_beta(j) for j in range(1, n + 1)]
    for k in range(1, n + 1):
        a = k - 1
        for src in sources:
            if k == 1:
                if src == _beta(1):
                    label = ((1, (a,), (a,)),)
                else:
                    label = ((1, (a,), (a,)), (-1, (), (a,)))
            elif src == _beta(k):
                label = ((1, (a,), (a,)), (-1, (a - 1,), (a,)), (1, (), (a,)))
            elif form == "validated":
                label = ((1, (a,), (a,)), (-1, (a - 1,), (a,)))
            else:
                label = ((1, (a,), (a,)),)
            arcs.append(Arc(src, _beta(k), _merge(label)))
    return _finish(n, arcs)


def accept_series(automaton, bound, absolute=False):
    """Coefficients of all pairs (u, w) with len(w) <= bound accepted by the automaton.

    Dynamic programming over the number of right letters read.  With
    ``absolute=True`` every monomial weight is replaced by its absolute value,
    which turns each coefficient into a count of contributing walks.
    """
    automaton.validate()
    inner = [a for a in automaton.arcs if a.target != OMEGA]
    finals = {a.source: a.label[0][0] for a in automaton.arcs if a.target == OMEGA}
    layer = {ALPHA: {((), ()): 1}}
    accepted = {}
    for step in range(bound + 1):
        for v, weights in layer.items():
            f = finals.get(v)
            if f is None:
                continue
            for pair, c in weights.items():
                accepted[pair] = accepted.get(pair, 0) + c * f
        if step == bound:
            break
        nxt = {}
        for arc in inner:
            weights = layer.get(arc.source)
            if not weights:
                continue
            target = nxt.setdefault(arc.target, {})
            for (u, w), c in weights.items():
                for d, x, y in arc.label:
                    key = (u + x, w + y)
                    target[key] = target.get(key, 0) + c * (abs(d) if absolute else d)
        layer = {v: {p: c for p, c in ws.items() if c} for v, ws in nxt.items()}
    return {p: c for p, c in accepted.items() if c}
