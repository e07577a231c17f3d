"""The linear representation psi of the Artin monoid of a small-type graph
with no triangle, acting on finitely supported vectors sum c_beta e_beta over
the positive roots, with coefficients in Z[x^{+-1}, y^{+-1}].
"""
from __future__ import annotations

import threading
from typing import Iterable, Iterator, Mapping

from .coxeter import parse_word
from .graph import CoxeterGraph, has_no_triangle, is_small_type
from .laurent import ONE, X, Y, ZERO, LaurentPoly2, parse_poly, to_text
from .report import VerificationReport
from .roots import Root, RootSystemContext, root_context


class RepError(ValueError):
    pass


class InternalInconsistency(AssertionError):
    """A vector referenced by the T recursion is not a positive root."""


X_INV = X ** -1
Y_INV = Y ** -1
Y_INV2 = Y ** -2
Y_INV3 = Y ** -3
ONE_MINUS_Y = ONE - Y
Y_MINUS_ONE = Y - ONE


class SparseVector:
    """Finitely supported map Root -> LaurentPoly2 (zero entries dropped)."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[Root, LaurentPoly2] | None = None):
        self.entries: dict[Root, LaurentPoly2] = (
            {r: p for r, p in entries.items() if p} if entries else {}
        )

    @classmethod
    def basis(cls, beta: Root) -> "SparseVector":
        return cls({beta: ONE})

    def add_term(self, beta: Root, c: LaurentPoly2) -> None:
        """In-place self += c e_beta."""
        if not c:
            return
        v = self.entries.get(beta)
        v = c if v is None else v + c
        if v:
            self.entries[beta] = v
        else:
            del self.entries[beta]

    def __add__(self, other: "SparseVector") -> "SparseVector":
        out = SparseVector(self.entries)
        for r, c in other.entries.items():
            out.add_term(r, c)
        return out

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + other.scale(-ONE)

    def scale(self, c) -> "SparseVector":
        return SparseVector({r: p * c for r, p in self.entries.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, SparseVector) and self.entries == other.entries

    def __iter__(self) -> Iterator[tuple[Root, LaurentPoly2]]:
        return iter(self.entries.items())

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def support(self) -> set[Root]:
        return set(self.entries)

    def map_coeffs(self, fn) -> "SparseVector":
        return SparseVector({r: fn(p) for r, p in self.entries.items()})


class RepContext:
    """Root context plus the memo table of the polynomials T(s, beta)."""

    def __init__(self, graph: CoxeterGraph | RootSystemContext):
        roots = graph if isinstance(graph, RootSystemContext) else root_context(graph)
        if not has_no_triangle(roots.graph):
            raise RepError("the representation needs a graph with no triangle")
        self.roots = roots
        self.graph = roots.graph
        self._tpoly: dict[tuple[int, Root], LaurentPoly2] = {}
        self._lock = threading.Lock()

    # T(s, beta)

    def _checked(self, v: Root) -> Root:
        try:
            self.roots.depth(v)
        except ValueError:
            raise InternalInconsistency(
                f"{self.roots.format(v)} is not a positive root"
            ) from None
        return v

    def tpoly(self, s: str | int, beta: Root, t: str | int | None = None) -> LaurentPoly2:
        """T(s, beta); ``t`` forces the descent vertex used at the top level."""
        R = self.roots
        si = s if isinstance(s, int) else self.graph.index(s)
        if t is None:
            hit = self._tpoly.get((si, beta))
            if hit is not None:
                return hit
        d = R.depth(beta)
        if d == 1:
            val = Y * Y if beta == R._simple[si] else ZERO
        else:
            if t is None:
                ti = R.descents(beta)[0]
            else:
                ti = t if isinstance(t, int) else self.graph.index(t)
                if R.pair_simple(ti, beta) <= 0:
                    raise RepError("t must satisfy <alpha_t, beta> > 0")
            val = self._recurse(si, ti, beta, d)
        if t is None:
            with self._lock:
                self._tpoly[(si, beta)] = val
        return val

    def _recurse(self, s: int, t: int, beta: Root, d: int) -> LaurentPoly2:
        R = self.roots
        T = self.tpoly
        a = R.pair_simple(s, beta)
        b = R.pair_simple(t, beta)
        if a > 0:
            return Y ** d * Y_MINUS_ONE  # alpha_s is a descent of beta
        alpha_s, alpha_t = R._simple[s], R._simple[t]
        lower = self._checked(beta - alpha_t.scaled(b))
        st = R.pair_simple(s, alpha_t)
        if a == 0:
            if st == 0:
                return Y * T(s, lower)  # beta orthogonal to alpha_s, s and t commute
            other = self._checked(beta - alpha_s.scaled(b) - alpha_t.scaled(b))
            return Y_MINUS_ONE * T(s, lower) + Y * T(t, other)  # beta orthogonal to alpha_s, s - t an edge
        # <alpha_s, beta> = -a < 0 from here on
        a = -a
        if st == 0:
            return Y * T(s, lower)
        if b > a:
            other = self._checked(beta - alpha_s.scaled(b - a) - alpha_t.scaled(b))
            return Y_MINUS_ONE * T(s, lower) + Y * T(t, other)
        if b == a:
            return T(t, lower) + Y_MINUS_ONE * T(s, lower)
        return Y * T(s, lower) + T(t, lower) + Y ** (d - 1) * ONE_MINUS_Y

    # the operators

    def _index(self, s) -> int:
        return s if isinstance(s, int) else self.graph.index(s)

    def phi_basis(self, s: int, beta: Root, out: SparseVector, c: LaurentPoly2) -> None:
        R = self.roots
        alpha_s = R._simple[s]
        if beta == alpha_s:
            return
        a = R.pair_simple(s, beta)
        if a == 0:
            out.add_term(beta, c)
        elif a > 0:
            out.add_term(beta - alpha_s.scaled(a), c * Y)
        else:
            out.add_term(beta, c * ONE_MINUS_Y)
            out.add_term(beta + alpha_s.scaled(-a), c)

    def phi_apply(self, s, v: SparseVector) -> SparseVector:
        si = self._index(s)
        out = SparseVector()
        for beta, c in v:
            self.phi_basis(si, beta, out, c)
        return out

    def psi_apply(self, s, v: SparseVector) -> SparseVector:
        """psi_s(e_beta) = phi_s(e_beta) + x T(s, beta) e_{alpha_s}."""
        si = self._index(s)
        out = SparseVector()
        acc = ZERO
        for beta, c in v:
            self.phi_basis(si, beta, out, c)
            tp = self.tpoly(si, beta)
            if tp:
                acc = acc + c * tp
        out.add_term(self.roots._simple[si], X * acc)
        return out

    def rho_apply(self, s, v: SparseVector) -> SparseVector:
        """The inverse of psi_s."""
        R = self.roots
        si = self._index(s)
        alpha_s = R._simple[si]
        out = SparseVector()
        acc = ZERO  # coefficient of e_{alpha_s}
        T = self.tpoly
        for beta, c in v:
            if beta == alpha_s:
                acc = acc + c * X_INV * Y_INV2
                continue
            a = R.pair_simple(si, beta)
            if a == 0:
                out.add_term(beta, c)
                acc = acc - c * Y_INV2 * T(si, beta)
            elif a > 0:
                lower = beta - alpha_s.scaled(a)
                out.add_term(beta, c * (ONE - Y_INV))
                out.add_term(lower, c)
                acc = acc - c * Y_INV2 * T(si, lower)
                acc = acc + c * Y_INV2 * (Y_INV - ONE) * T(si, beta)
            else:
                upper = beta + alpha_s.scaled(-a)
                out.add_term(upper, c * Y_INV)
                acc = acc - c * Y_INV3 * T(si, upper)
        out.add_term(alpha_s, acc)
        return out

    def word_apply(self, op, f, v: SparseVector) -> SparseVector:
        for s in reversed(parse_word(f)):
            v = op(s, v)
        return v

    def psi_word_apply(self, f, v: SparseVector) -> SparseVector:
        """psi(sigma_{s1} ... sigma_{sk}) v = psi_{s1}(... psi_{sk}(v))."""
        return self.word_apply(self.psi_apply, f, v)

    def phi_word_apply(self, f, v: SparseVector) -> SparseVector:
        return self.word_apply(self.phi_apply, f, v)

    def basis(self, beta: Root) -> SparseVector:
        return SparseVector.basis(beta)

    # serialization

    def vector_to_json(self, v: SparseVector) -> dict:
        import json

        items = sorted(v.entries.items(), key=lambda kv: self.roots.sort_key(kv[0]))
        return {json.dumps(self.roots.to_dict(r), sort_keys=True): to_text(p) for r, p in items}

    def vector_from_json(self, doc: Mapping[str, str]) -> SparseVector:
        import json

        return SparseVector(
            {self.roots.root(json.loads(k)): parse_poly(p) for k, p in doc.items()}
        )


_REP: dict[CoxeterGraph, RepContext] = {}


def rep_context(graph: CoxeterGraph) -> RepContext:
    ctx = _REP.get(graph)
    if ctx is None:
        ctx = _REP.setdefault(graph, RepContext(graph))
    return ctx


def _pairs(g: CoxeterGraph) -> Iterable[tuple[str, str, int]]:
    vs = g.vertices
    for i, s in enumerate(vs):
        for t in vs[i + 1:]:
            yield s, t, g.label(s, t)


def verify_relations(ctx: RepContext, max_depth: int) -> VerificationReport:
    """psi_s psi_t psi_s = psi_t psi_s psi_t on edges, psi_s psi_t = psi_t psi_s
    otherwise, on every e_beta with dp(beta) <= max_depth."""
    rep = VerificationReport("relations", _name(ctx.graph), {"max_depth": max_depth})
    basis = ctx.roots.enumerate_positive_roots(max_depth)
    for s, t, m in _pairs(ctx.graph):
        lhs, rhs = ((s, t, s), (t, s, t)) if m == 3 else ((s, t), (t, s))
        failures = []
        for beta in basis:
            e = SparseVector.basis(beta)
            if ctx.psi_word_apply(lhs, e) != ctx.psi_word_apply(rhs, e):
                failures.append({"s": s, "t": t, "beta": ctx.roots.to_dict(beta)})
        kind = "braid" if m == 3 else "commute"
        rep.tally(f"{kind} {s},{t}", failures, len(basis))
    return rep.finish()


def verify_inverse(ctx: RepContext, max_depth: int) -> VerificationReport:
    rep = VerificationReport("inverse", _name(ctx.graph), {"max_depth": max_depth})
    basis = ctx.roots.enumerate_positive_roots(max_depth)
    for s in ctx.graph.vertices:
        failures = []
        for beta in basis:
            e = SparseVector.basis(beta)
            if ctx.psi_apply(s, ctx.rho_apply(s, e)) != e or ctx.rho_apply(s, ctx.psi_apply(s, e)) != e:
                failures.append({"s": s, "beta": ctx.roots.to_dict(beta)})
        rep.tally(f"rho_{s} psi_{s} = psi_{s} rho_{s} = id", failures, len(basis))
    return rep.finish()


def verify_tpoly(ctx: RepContext, max_depth: int) -> VerificationReport:
    """Independence of T(s, beta) from the descent vertex, and T(s, beta) =
    T(t, beta) when s - t is an edge and beta is orthogonal to both."""
    R = ctx.roots
    rep = VerificationReport("tpoly", _name(ctx.graph), {"max_depth": max_depth})
    roots = R.enumerate_positive_roots(max_depth)
    choice_fail, choice_n = [], 0
    swap_fail, swap_n = [], 0
    degree_fail = []
    for beta in roots:
        d = R.depth(beta)
        down = R.descents(beta) if d >= 2 else []
        for s in ctx.graph.vertices:
            base = ctx.tpoly(s, beta)
            if not (base.x_free() and base.is_polynomial() and base.degree_y() <= d + 1):
                degree_fail.append({"s": s, "beta": R.to_dict(beta), "T": str(base)})
            for t in down[1:]:
                choice_n += 1
                alt = ctx.tpoly(s, beta, t=t)
                if alt != base:
                    choice_fail.append(
                        {"s": s, "beta": R.to_dict(beta), "t": R.vertices[t],
                         "T": str(base), "T_alt": str(alt)}
                    )
    for s, t, m in _pairs(ctx.graph):
        if m != 3:
            continue
        for beta in roots:
            if R.pair_simple(s, beta) == 0 and R.pair_simple(t, beta) == 0:
                swap_n += 1
                if ctx.tpoly(s, beta) != ctx.tpoly(t, beta):
                    swap_fail.append({"s": s, "t": t, "beta": R.to_dict(beta)})
    rep.tally("T independent of the choice of t", choice_fail, choice_n)
    rep.tally("T(s,beta) = T(t,beta) for orthogonal beta on an edge", swap_fail, swap_n)
    rep.tally("T in Z[y] with degree <= dp(beta)+1", degree_fail, len(roots) * len(ctx.graph))
    return rep.finish()


def _name(g: CoxeterGraph) -> str:
    return getattr(g, "name", None) or f"graph[{len(g)} vertices, {len(g.labels)} edges]"
