"""Closed subsets of the positive roots and the action g * A of positive words.

``decode`` recovers a positive word from the action alone: u = C(f * {})
is the largest w with tau(w) dividing f, so f = tau(u) f_1 and the process
repeats on f_1. Two words are equal in the monoid iff their decodings agree.
"""
from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .coxeter import GroupElement, canonicalize, parse_word, tau
from .graph import CoxeterGraph
from .monoid import left_quotient
from .roots import Root, RootSystemContext, root_context

ClosedSet = frozenset  # of Root


class DecodeError(AssertionError):
    pass


def _ctx(g) -> RootSystemContext:
    return g if isinstance(g, RootSystemContext) else root_context(g)


def is_closed(ctx, A: Iterable[Root]) -> bool:
    ctx = _ctx(ctx)
    A = set(A)
    for a, b in combinations(A, 2):
        p = ctx.pairing(a, b)
        if p < -1 or (p == -1 and a + b not in A):
            return False
    return True


def cmax(ctx, A: Iterable[Root]) -> GroupElement:
    """C(A): the largest w with Phi_w contained in A.

    Greedy growth w -> ws while w(alpha_s) is a positive root lying in A
    (then Phi_ws = Phi_w + {w(alpha_s)}).
    """
    ctx = _ctx(ctx)
    A = set(A)
    w: list[str] = []
    grown = True
    while grown:
        grown = False
        for s in ctx.vertices:
            r = ctx.apply_word(w, ctx.simple(s))
            if r.is_positive and r in A:
                w.append(s)
                grown = True
                break
    return canonicalize(ctx, w)


def star(ctx, s: str, A: Iterable[Root]) -> ClosedSet:
    """sigma_s * A.

    {alpha_s} together with: beta in A orthogonal to alpha_s; s(beta) for
    beta in A with <alpha_s, beta> < 0; and such beta themselves when s(beta)
    is also in A.
    """
    ctx = _ctx(ctx)
    A = A if isinstance(A, (set, frozenset)) else set(A)
    i = ctx.graph.index(s)
    alpha = ctx._simple[i]
    out = {alpha}
    for beta in A:
        p = ctx.pair_simple(i, beta)
        if p == 0:
            out.add(beta)
        elif p < 0:
            up = ctx.reflect_simple(i, beta)
            out.add(up)
            if up in A:
                out.add(beta)
    return frozenset(out)


def star_word(ctx, f, A: Iterable[Root] = ()) -> ClosedSet:
    """f * A, the last letter acting first."""
    ctx = _ctx(ctx)
    A = frozenset(A)
    for s in reversed(parse_word(f)):
        A = star(ctx, s, A)
    return A


def decode(ctx, f) -> list[GroupElement]:
    ctx = _ctx(ctx)
    f = parse_word(f)
    out = []
    while f:
        u = cmax(ctx, star_word(ctx, f))
        if not u.canonical:
            raise DecodeError(f"C(f * {{}}) = 1 for nonempty f = {f}")
        rest = left_quotient(ctx.graph, tau(u), f)
        if rest is None:
            raise DecodeError(f"tau({u}) does not divide {f}")
        out.append(u)
        f = rest
    return out


def eq_via_decode(ctx, f, g) -> bool:
    f, g = parse_word(f), parse_word(g)
    if len(f) != len(g):
        return False
    return [u.canonical for u in decode(ctx, f)] == [u.canonical for u in decode(ctx, g)]


def all_closed_subsets(ctx, roots: Iterable[Root] | None = None) -> list[ClosedSet]:
    """Every closed subset of ``roots`` (default: all of a finite Phi+)."""
    ctx = _ctx(ctx)
    roots = list(ctx.all_positive_roots() if roots is None else roots)
    out = []
    for k in range(len(roots) + 1):
        for A in combinations(roots, k):
            if is_closed(ctx, A):
                out.append(frozenset(A))
    return out


def star_via_support(rep, f, A: Iterable[Root], horizon: int, y0=Fraction(1, 2)) -> set[Root]:
    """f * A restricted to depth <= horizon, read off from psi at x = 0, y = y0.

    A root gamma lies outside f * A iff gamma is in the support of
    psi_0(f)(e_beta) for some beta outside A. Each letter moves the support
    by at most one depth level, so only beta with dp <= horizon + |f| matter.
    """
    R = rep.roots
    f = parse_word(f)
    A = set(A)
    targets = set(R.enumerate_positive_roots(horizon))
    hit = set()
    for beta in R.enumerate_positive_roots(horizon + len(f)):
        if beta in A:
            continue
        v = rep.psi_word_apply(f, rep.basis(beta))
        for gamma, c in v:
            if gamma in targets and c.at_x0().evaluate(0, y0) > 0:
                hit.add(gamma)
    return targets - hit


def closed_to_json(ctx, A: Iterable[Root]) -> str:
    ctx = _ctx(ctx)
    return json.dumps([ctx.to_dict(r) for r in sorted(A, key=ctx.sort_key)])
