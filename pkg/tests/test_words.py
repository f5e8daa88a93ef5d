from itertools import combinations, product

import pytest
from hypothesis import given, settings

from conftest import words
from subword_mobius.poset import BOTTOM, NotRootedForestError, make_antichain, make_chain, make_lambda
from subword_mobius.words import (
    EMPTY,
    Embedding,
    all_embeddings,
    all_words,
    defect,
    is_normal,
    leq_words,
    normal_embeddings,
    parse_word,
    rightmost_embedding,
    runs,
)


def enumerate_embeddings(u, w, P):
    """Every support set of size len(u), filtered by domination."""
    out = []
    for support in combinations(range(len(w)), len(u)):
        if all(P.le(a, w[i]) for a, i in zip(u, support)):
            entries = [BOTTOM] * len(w)
            for a, i in zip(u, support):
                entries[i] = a
            out.append(tuple(entries))
    return out


def fmt(emb, P):
    return emb.format(P)


def test_order_examples():
    C6 = make_chain(6)
    assert leq_words(parse_word("3,3,4", C6), parse_word("3,4,2,6,1", C6), C6)
    A = make_antichain(2)
    assert leq_words(parse_word("a,b,b,a", A), parse_word("a,b,a,b,b,b,a,a", A), A)
    C2 = make_chain(2)
    assert not leq_words((1,), (0, 0), C2)


def test_rightmost_example():
    C6 = make_chain(6)
    u, w = parse_word("3,3,4", C6), parse_word("3,4,2,6,1", C6)
    rho = rightmost_embedding(u, w, C6)
    assert fmt(rho, C6) == "33040"
    assert rho.support == (0, 1, 3)
    supports = [tuple(i for i, e in enumerate(x) if e != BOTTOM) for x in enumerate_embeddings(u, w, C6)]
    assert max(supports) == rho.support
    assert all(all(r >= s for r, s in zip(rho.support, sup)) for sup in supports)


def test_rightmost_trivial_cases(chain3):
    w = (2, 0, 1)
    assert rightmost_embedding(EMPTY, w, chain3).entries == (BOTTOM,) * 3
    assert rightmost_embedding(w, w, chain3).entries == w
    assert rightmost_embedding((2,), (1,), chain3) is None


def test_all_embeddings_examples(chain2, ab):
    assert sorted(fmt(e, chain2) for e in all_embeddings((0,), (1, 0), chain2)) == ["01", "10"]
    u, w = parse_word("a,b,b,a", ab), parse_word("a,b,a,b,b,b,a,a", ab)
    assert (0, 3, 5, 7) in [e.support for e in all_embeddings(u, w, ab)]
    assert all_embeddings(EMPTY, EMPTY, ab) == [Embedding((), ())]


def test_runs():
    A = make_antichain(2)
    assert [iv for _, iv in runs(parse_word("a,b,a,b,b,b,a,a", A))] == [(1, 1), (2, 2), (3, 3), (4, 6), (7, 8)]
    C3 = make_chain(3)
    assert [(C3.names[a], iv) for a, iv in runs(parse_word("2,2,1,1,1,3,3", C3))] == [
        ("2", (1, 2)),
        ("1", (3, 5)),
        ("3", (6, 7)),
    ]
    assert runs(EMPTY) == []


def test_normal_embeddings_worked_examples(chain3, ab):
    u, w = parse_word("a,b,b,a", ab), parse_word("a,b,a,b,b,b,a,a", ab)
    assert sorted(fmt(e, ab) for e in normal_embeddings(u, w, ab)) == ["00a0bb0a", "a000bb0a"]

    u, w = parse_word("2,1,1,1,3", chain3), parse_word("2,2,1,1,1,3,3", chain3)
    got = {fmt(e, chain3): e for e in normal_embeddings(u, w, chain3)}
    assert sorted(got) == ["2011130", "2101130"]
    assert defect(got["2101130"], chain3) == 2
    assert defect(got["2011130"], chain3) == 0

    def emb(text):
        return Embedding(w, tuple(BOTTOM if ch == "0" else int(ch) - 1 for ch in text))

    # letter condition: 1 sits under a 3
    assert not is_normal(emb("2001113"), chain3)
    # run condition: the run of 2's starts off the support
    assert not is_normal(emb("0211130"), chain3)


def test_identity_has_zero_defect(chain3):
    w = (1, 1, 0, 2)
    assert defect(Embedding(w, w), chain3) == 0


def test_forest_required():
    L = make_lambda()
    with pytest.raises(NotRootedForestError):
        normal_embeddings((0,), (2,), L)


@settings(max_examples=150, deadline=None)
@given(words(3, 3), words(3, 5))
def test_leq_matches_embeddings(u, w):
    P = make_chain(3)
    embs = all_embeddings(u, w, P)
    assert leq_words(u, w, P) == bool(embs)
    assert sorted(e.entries for e in embs) == sorted(enumerate_embeddings(u, w, P))
    rho = rightmost_embedding(u, w, P)
    if embs:
        assert all(all(r >= s for r, s in zip(rho.support, e.support)) for e in embs)
        assert rho.word == u
    else:
        assert rho is None


@settings(max_examples=150, deadline=None)
@given(words(3, 3), words(3, 5))
def test_normal_embeddings_are_normal(u, w):
    P = make_chain(3)
    everything = {e.entries for e in all_embeddings(u, w, P)}
    normal = normal_embeddings(u, w, P)
    assert all(e.entries in everything and is_normal(e, P) for e in normal)
    # and nothing normal was missed
    assert {e.entries for e in normal} == {e.entries for e in all_embeddings(u, w, P) if is_normal(e, P)}


def test_antichain_defect_equals_length_gap():
    A = make_antichain(2)
    for w in all_words(A, 6):
        for length in range(len(w) + 1):
            for u in product(range(2), repeat=length):
                for e in normal_embeddings(u, w, A):
                    assert defect(e, A) == len(w) - len(u)
