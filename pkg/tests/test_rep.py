import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinkit.graph import CoxeterGraph, chain
from artinkit.laurent import ONE, X, Y, ZERO, to_text
from artinkit.monoid import braid_neighbors
from artinkit.rep import (
    RepContext,
    RepError,
    SparseVector,
    rep_context,
    verify_inverse,
    verify_relations,
    verify_tpoly,
)

from conftest import bundled, two_vertex


@pytest.fixture(scope="module")
def rep2():
    return RepContext(bundled("A2"))


@pytest.fixture(scope="module")
def rep_m2():
    return RepContext(two_vertex(2))


def e(rep, coeffs):
    return rep.basis(rep.roots.vector(coeffs))


def test_tpoly_examples(rep2):
    R = rep2.roots
    s, t = R.simple("s"), R.simple("t")
    assert rep2.tpoly("s", s) == Y ** 2
    assert rep2.tpoly("s", t) == ZERO
    assert rep2.tpoly("s", s + t) == Y ** 2 * (Y - 1)
    assert rep2.tpoly("t", s + t) == Y ** 2 * (Y - 1)
    assert to_text(rep2.tpoly("s", s + t)) == "-y^2 + y^3"


def test_phi_examples(rep2, rep_m2):
    R = rep2.roots
    es, et = e(rep2, {"s": 1}), e(rep2, {"t": 1})
    assert rep2.phi_apply("s", es) == SparseVector()
    expected = SparseVector({R.simple("t"): ONE - Y, R.simple("s") + R.simple("t"): ONE})
    assert rep2.phi_apply("s", et) == expected
    et2 = e(rep_m2, {"t": 1})
    assert rep_m2.phi_apply("s", et2) == et2


def test_psi_examples(rep2, rep_m2):
    R = rep2.roots
    es, et = e(rep2, {"s": 1}), e(rep2, {"t": 1})
    assert rep2.psi_apply("s", es) == SparseVector({R.simple("s"): X * Y ** 2})
    assert rep2.psi_apply("s", et) == rep2.phi_apply("s", et)
    et2 = e(rep_m2, {"t": 1})
    assert rep_m2.psi_apply("s", et2) == et2


def test_rho_examples(rep2, rep_m2):
    R = rep2.roots
    es = e(rep2, {"s": 1})
    assert rep2.rho_apply("s", es) == SparseVector({R.simple("s"): X ** -1 * Y ** -2})
    et2 = e(rep_m2, {"t": 1})
    assert rep_m2.rho_apply("s", et2) == et2


def test_word_action_examples(rep2):
    R = rep2.roots
    v = e(rep2, {"s": 1, "t": 1})
    assert rep2.psi_word_apply((), v) == v
    for beta in R.all_positive_roots():
        b = rep2.basis(beta)
        assert rep2.psi_word_apply("s t s", b) == rep2.psi_word_apply("t s t", b)


def test_triangle_rejected():
    with pytest.raises(RepError):
        RepContext(bundled("triangle"))


@pytest.mark.parametrize("name,depth", [("A2", 3), ("A3", 6), ("D4", 6), ("A3_affine", 5), ("K33", 4)])
def test_relation_suite(name, depth):
    rep = rep_context(bundled(name))
    assert verify_relations(rep, depth).ok
    assert verify_inverse(rep, min(depth, 5)).ok


@pytest.mark.parametrize("name,depth", [("A2", 2), ("A3", 6), ("A3_affine", 5), ("K33", 4)])
def test_tpoly_suite(name, depth):
    assert verify_tpoly(rep_context(bundled(name)), depth).ok


def test_swap_identity_is_exercised():
    # A3 and the 4-cycle have no qualifying triples; longer chains and
    # cycles do, so the swap check is not vacuous there
    names = [str(i) for i in range(6)]
    hexagon = CoxeterGraph.from_edges(names, [(names[i], names[(i + 1) % 6], 3) for i in range(6)])
    for g in (chain(5), hexagon):
        rep = verify_tpoly(RepContext(g), 5)
        swap = [c for c in rep.checks if c.name.startswith("T(s,beta) = T(t,beta)")][0]
        assert rep.ok and swap.count > 0


def test_suite_detects_a_corrupted_polynomial(monkeypatch):
    rep = RepContext(bundled("A3"))
    honest = RepContext.tpoly

    def corrupted(self, s, beta, t=None):
        val = honest(self, s, beta, t)
        return val + Y ** 7 if self.roots.depth(beta) == 3 else val

    monkeypatch.setattr(RepContext, "tpoly", corrupted)
    assert not verify_relations(rep, 6).ok


def test_psi_at_x0_is_phi():
    rep = rep_context(bundled("A3_affine"))
    for beta in rep.roots.enumerate_positive_roots(5):
        b = rep.basis(beta)
        for s in rep.graph.vertices:
            assert rep.psi_apply(s, b).map_coeffs(lambda c: c.at_x0()) == rep.phi_apply(s, b)


def test_vector_json_round_trip():
    rep = rep_context(bundled("A3"))
    v = rep.psi_word_apply("1 2 3 2", rep.basis(rep.roots.simple("2")))
    assert rep.vector_from_json(rep.vector_to_json(v)) == v


def _random_braid_walk(g, w, steps, rng):
    for _ in range(steps):
        nbrs = list(braid_neighbors(g, w))
        if not nbrs:
            break
        w = rng.choice(nbrs)
    return w


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(["1", "2", "3", "4"]), min_size=1, max_size=6).map(tuple),
       st.integers(0, 10**6), st.integers(1, 4))
def test_braid_equivalent_words_act_identically(f, seed, d):
    g = bundled("A3_affine")
    rep = rep_context(g)
    other = _random_braid_walk(g, f, 8, random.Random(seed))
    beta = rep.roots.enumerate_positive_roots(d)[seed % (4 * d)]
    b = rep.basis(beta)
    assert rep.psi_word_apply(f, b) == rep.psi_word_apply(other, b)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(["1", "2", "3", "4"]), max_size=5).map(tuple))
def test_positive_words_keep_x0_coefficients_positive_at_half(f):
    # at x = 0, y = 1/2 every operator phi_s has nonnegative entries, so
    # positive words send basis vectors to vectors with positive coefficients
    from fractions import Fraction
    rep = rep_context(bundled("A3_affine"))
    for beta in rep.roots.enumerate_positive_roots(2):
        v = rep.phi_word_apply(f, rep.basis(beta))
        for _, c in v:
            assert c.evaluate(0, Fraction(1, 2)) > 0
