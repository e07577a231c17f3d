"""Executable versions of the order-theoretic and closed-set laws, run as
verification suites over bounded families of words, elements and sets."""
from __future__ import annotations

import random
from itertools import product

from .closed import (
    all_closed_subsets,
    cmax,
    is_closed,
    star,
    star_word,
)
from .coxeter import (
    canonicalize,
    enumerate_elements,
    inversion_set,
    left_descent,
    tau,
    weak_le,
)
from .graph import CoxeterGraph
from .monoid import L, L_exhaustive, left_divides
from .report import VerificationReport
from .roots import root_context


def words_upto(g: CoxeterGraph, n: int):
    for k in range(n + 1):
        yield from product(g.vertices, repeat=k)


def verify_order(g: CoxeterGraph, max_len: int = 5) -> VerificationReport:
    ctx = root_context(g)
    rep = VerificationReport("order", f"{len(g)}-vertex graph", {"max_len": max_len})
    finite = ctx.is_finite()
    elems = enumerate_elements(g) if finite else enumerate_elements(g, max_len)
    small = [e for e in elems if len(e) <= max_len]

    fails, n = [], 0
    for w in words_upto(g, max_len):
        for cut in range(len(w) + 1):
            f, h = w[:cut], w[cut:]
            n += 1
            lhs = L(g, w)
            rhs = L(g, f + tau(L(g, h)))
            if lhs != rhs:
                fails.append({"f": f, "g": h, "L(fg)": str(lhs), "L(f tau L(g))": str(rhs)})
    rep.tally("L(fg) = L(f tau(L(g)))", fails, n)

    size_fail, closed_fail = [], []
    for e in small:
        phi = inversion_set(ctx, e)
        if len(phi) != len(e):
            size_fail.append(str(e))
        if not is_closed(ctx, phi):
            closed_fail.append(str(e))
    rep.tally("|Phi_w| = l(w)", size_fail, len(small))
    rep.tally("Phi_w is closed", closed_fail, len(small))

    fails, n = [], 0
    phis = {e: inversion_set(ctx, e) for e in small}
    for u in small:
        for v in small:
            n += 1
            le = weak_le(u, v)
            if le != left_divides(g, tau(u), tau(v)) or le != (phis[u] <= phis[v]):
                fails.append({"u": str(u), "v": str(v)})
    rep.tally("u <= v iff tau(u) | tau(v) iff Phi_u in Phi_v", fails, n)

    fails, n = [], 0
    for e in small:
        for s in g.vertices:
            n += 1
            up = len(canonicalize(g, (s,) + e.canonical))
            if up != len(e) + (-1 if left_descent(ctx, e, s) else 1):
                fails.append({"s": s, "w": str(e)})
    rep.tally("l(sw) = l(w) +- 1", fails, n)

    if finite:
        fails, n = [], 0
        for w in words_upto(g, min(max_len, 4)):
            n += 1
            if L(g, w) != L_exhaustive(g, w, elems):
                fails.append(w)
        rep.tally("greedy L = exhaustive L", fails, n)
    return rep.finish()


def sample_closed_subsets(g: CoxeterGraph, count: int, seed: int = 0,
                          horizon: int = 3, p: float = 0.4) -> list[frozenset]:
    """``count`` closed subsets (repeats allowed) of the roots of depth <=
    horizon, drawn by keeping each root with probability p and rejecting
    non-closed draws."""
    ctx = root_context(g)
    roots = ctx.enumerate_positive_roots(horizon)
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        A = frozenset(r for r in roots if rng.random() < p)
        if is_closed(ctx, A):
            out.append(A)
    return out


def _set_key(A):
    return (len(A), sorted(r.coeffs for r in A))


def verify_closed(g: CoxeterGraph, max_len: int = 5, samples: int = 500,
                  seed: int = 0, exhaustive_limit: int = 12) -> VerificationReport:
    ctx = root_context(g)
    rep = VerificationReport("closed", f"{len(g)}-vertex graph",
                             {"max_len": max_len, "samples": samples, "seed": seed})
    finite = ctx.is_finite()
    exhaustive = finite and len(ctx.all_positive_roots()) <= exhaustive_limit
    if exhaustive:
        family = all_closed_subsets(ctx)
        pool = family
    else:
        family = sorted(set(sample_closed_subsets(g, samples, seed)), key=_set_key)
        shallow = all_closed_subsets(ctx, ctx.enumerate_positive_roots(2))
        pool = sorted(set(family) | set(shallow), key=_set_key)
    rep.params["family"] = len(family)

    fails, n = [], 0
    sub_fail, l48_fail, l48_n = [], [], 0
    for A in family:
        for s in g.vertices:
            n += 1
            alpha = ctx.simple(s)
            B = star(ctx, s, A)
            bound = {alpha} | {ctx.reflect_simple(s, b) for b in A if b != alpha}
            if not is_closed(ctx, B) or alpha not in B:
                fails.append({"s": s, "A": sorted(r.coeffs for r in A)})
            if not B <= bound:
                sub_fail.append({"s": s, "A": sorted(r.coeffs for r in A)})
            for Bc in pool:
                if alpha in Bc and Bc <= bound:
                    l48_n += 1
                    if not Bc <= B:
                        l48_fail.append({"s": s, "A": sorted(r.coeffs for r in A)})
    rep.tally("sigma_s * A closed and contains alpha_s", fails, n)
    rep.tally("sigma_s * A inside {alpha_s} + s(A - alpha_s)", sub_fail, n)
    rep.tally("closed B between alpha_s and the bound lies in sigma_s * A", l48_fail, l48_n)

    elems = enumerate_elements(g) if finite else enumerate_elements(g, 6)
    fails, n = [], 0
    for A in family:
        cA = cmax(ctx, A)
        for s in g.vertices:
            Lw = L(g, (s,) + tau(cA))
            alpha = ctx.simple(s)
            bound = {alpha} | {ctx.reflect_simple(s, b) for b in A if b != alpha}
            for w in elems:
                if not left_descent(ctx, w, s):
                    continue
                n += 1
                if (inversion_set(ctx, w) <= bound) != weak_le(w, Lw):
                    fails.append({"s": s, "w": str(w), "A": sorted(r.coeffs for r in A)})
    rep.tally("Phi_w in bound iff w <= L(sigma_s tau(C(A)))", fails, n)

    fails, n = [], 0
    law_family = family if exhaustive else family[:60]
    for A in law_family:
        tc = tau(cmax(ctx, A))
        for w in words_upto(g, max_len):
            n += 1
            if cmax(ctx, star_word(ctx, w, A)) != L(g, w + tc):
                fails.append({"g": w, "A": sorted(r.coeffs for r in A)})
    rep.tally("C(g * A) = L(g tau(C(A)))", fails, n)

    fails = []
    round_elems = [e for e in elems if len(e) <= 6]
    for e in round_elems:
        phi = inversion_set(ctx, e)
        if star_word(ctx, tau(e)) != phi or cmax(ctx, phi) != e:
            fails.append(str(e))
    rep.tally("tau(w) * {} = Phi_w and C(Phi_w) = w", fails, len(round_elems))
    return rep.finish()
