import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinkit.closed import (
    all_closed_subsets,
    closed_to_json,
    cmax,
    decode,
    eq_via_decode,
    is_closed,
    star,
    star_via_support,
    star_word,
)
from artinkit.coxeter import canonicalize, enumerate_elements, identity, inversion_set, tau
from artinkit.monoid import L, monoid_eq, monoid_eq_bfs
from artinkit.rep import rep_context
from artinkit.roots import root_context
from artinkit.suites import sample_closed_subsets, verify_closed, verify_order

from conftest import bundled, two_vertex
from oracles import braid_classes


@pytest.fixture(scope="module")
def c2():
    return root_context(bundled("A2"))


def test_is_closed_examples(c2):
    s, t = c2.simple("s"), c2.simple("t")
    assert is_closed(c2, set())
    assert not is_closed(c2, {s, t})
    assert is_closed(c2, {s, t, s + t})


def test_cmax_examples(c2, A2):
    s, t = c2.simple("s"), c2.simple("t")
    assert cmax(c2, set()) == identity(A2)
    assert str(cmax(c2, {s})) == "s"
    assert str(cmax(c2, {s, t, s + t})) == "s t s"


def test_star_examples(c2):
    s, t = c2.simple("s"), c2.simple("t")
    assert star(c2, "s", set()) == {s}
    assert star(c2, "s", {t}) == {s, s + t}
    cm = root_context(two_vertex(2))
    assert star(cm, "s", {cm.simple("t")}) == {cm.simple("s"), cm.simple("t")}


def test_star_word_examples(c2, A2):
    s, t = c2.simple("s"), c2.simple("t")
    A = {s, t, s + t}
    assert star_word(c2, "", A) == A
    B = star_word(c2, "s t")
    assert B == {s, s + t} == inversion_set(c2, canonicalize(A2, "s t"))
    assert cmax(c2, B) == L(A2, "s t")
    for C in all_closed_subsets(c2):
        assert star_word(c2, "s t s", C) == star_word(c2, "t s t", C)


def test_decode_examples(A2):
    assert decode(A2, "") == []
    assert [str(u) for u in decode(A2, "s s")] == ["s", "s"]
    assert [str(u) for u in decode(A2, "t s t")] == ["s t s"]


def test_eq_examples(A2):
    assert eq_via_decode(A2, "s t s t", "s t s t")
    assert eq_via_decode(A2, "s t s", "t s t")
    assert not eq_via_decode(A2, "s t", "t s")
    assert [str(u) for u in decode(A2, "s t")] == ["s t"]
    assert [str(u) for u in decode(A2, "t s")] == ["t s"]


def test_closed_subset_count_A2(c2):
    # subsets of {a, b, a+b}: all except {a, b}
    assert len(all_closed_subsets(c2)) == 7


@pytest.mark.parametrize("name,n", [("A2", 6), ("A3", 5), ("A3_affine", 4)])
def test_decode_separates_braid_classes(name, n):
    g = bundled(name)
    words = [w for k in range(n + 1) for w in itertools.product(g.vertices, repeat=k)]
    parent, classes = braid_classes(g, words)
    seen = {}
    for c in classes:
        codes = {tuple(u.canonical for u in decode(g, w)) for w in c}
        assert len(codes) == 1
        code = codes.pop()
        assert code not in seen
        seen[code] = c


def test_decode_recomposes(A3):
    for w in itertools.product(A3.vertices, repeat=5):
        seq = decode(A3, w)
        assert all(len(u) > 0 for u in seq)
        assert monoid_eq_bfs(A3, sum((tau(u) for u in seq), ()), w)


@pytest.mark.parametrize("name,horizon,length", [("A2", 3, 4), ("A3", 3, 3), ("A3_affine", 2, 3)])
def test_star_matches_the_support_oracle(name, horizon, length):
    g = bundled(name)
    rep = rep_context(g)
    R = rep.roots
    shallow = set(R.enumerate_positive_roots(horizon))
    family = all_closed_subsets(R, R.enumerate_positive_roots(min(horizon, 2)))
    for f in itertools.product(g.vertices, repeat=length):
        for A in family[:12]:
            assert star_word(R, f, A) & shallow == star_via_support(rep, f, A, horizon)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(["1", "2", "3", "4"]), max_size=7).map(tuple))
def test_star_of_word_is_inversion_set_affine(word):
    g = bundled("A3_affine")
    ctx = root_context(g)
    w = canonicalize(g, word)
    assert star_word(ctx, tau(w)) == inversion_set(ctx, w)
    assert cmax(ctx, inversion_set(ctx, w)) == w


def test_sampler_is_seeded_and_closed(A3):
    a = sample_closed_subsets(A3, 50, seed=3)
    b = sample_closed_subsets(A3, 50, seed=3)
    assert a == b
    ctx = root_context(A3)
    assert all(is_closed(ctx, A) for A in a)


def test_order_and_closed_suites_small(A2):
    assert verify_order(A2, 5).ok
    assert verify_closed(A2, 4).ok


def test_closed_to_json(c2):
    s, t = c2.simple("s"), c2.simple("t")
    assert closed_to_json(c2, {t, s}) == '[{"s": 1}, {"t": 1}]'
