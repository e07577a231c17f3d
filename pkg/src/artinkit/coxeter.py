"""Coxeter group elements of small-type graphs.

The word problem is solved through the integer root action: appending a
letter s to a reduced word for w lengthens it iff w(alpha_s) is positive,
and when it does not, the exchange condition locates the letter to delete.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import CoxeterGraph, GraphError, is_spherical
from .roots import Root, RootSystemContext, root_context


class NotSphericalError(ValueError):
    pass


def parse_word(text: str | Sequence[str]) -> tuple[str, ...]:
    """Whitespace-separated vertex identifiers; sequences pass through."""
    if isinstance(text, str):
        return tuple(text.split())
    return tuple(text)


def format_word(word: Iterable[str]) -> str:
    return " ".join(word)


def _exchange_index(ctx: RootSystemContext, letters: Sequence[int], s: int) -> int | None:
    """Position j with s.w = w with letter j deleted, or None if l(sw) = l(w)+1.

    Walks w^{-1}(alpha_s) = r_k ... r_1 (alpha_s) letter by letter; it turns
    negative exactly when the current root equals alpha_{r_j}.
    """
    adj = ctx._adj
    gamma = [0] * ctx.rank
    gamma[s] = 1
    height = 1
    for j, t in enumerate(letters):
        if height == 1 and gamma[t] == 1:
            return j
        p = 2 * gamma[t] - sum(gamma[u] for u in adj[t])
        gamma[t] -= p
        height -= p
    return None


def _reduce(ctx: RootSystemContext, letters: Iterable[int]) -> list[int]:
    """A reduced word (as indices) for the product of ``letters``."""
    out: list[int] = []
    for s in letters:
        # right multiplication by s is left multiplication of the reversed word
        rev = out[::-1]
        j = _exchange_index(ctx, rev, s)
        if j is None:
            out.append(s)
        else:
            del out[len(out) - 1 - j]
    return out


def _canonical(ctx: RootSystemContext, reduced: list[int]) -> list[int]:
    """Lexicographically least reduced word: peel the least left descent."""
    rest = list(reduced)
    out = []
    while rest:
        for s in range(ctx.rank):
            j = _exchange_index(ctx, rest, s)
            if j is not None:
                out.append(s)
                del rest[j]
                break
        else:  # pragma: no cover - a nonempty reduced word has a left descent
            raise AssertionError("no left descent found")
    return out


@dataclass(frozen=True)
class GroupElement:
    """An element of W, stored as its lexicographically least reduced word."""

    graph: CoxeterGraph
    canonical: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.canonical)

    def __len__(self):
        return len(self.canonical)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return canonicalize(self.graph, self.canonical + other.canonical)

    def inverse(self) -> "GroupElement":
        return canonicalize(self.graph, self.canonical[::-1])

    def times(self, s: str) -> "GroupElement":
        return canonicalize(self.graph, self.canonical + (s,))

    def __str__(self):
        return format_word(self.canonical) or "1"


def _ctx(g) -> RootSystemContext:
    return g if isinstance(g, RootSystemContext) else root_context(g)


def canonicalize(g: CoxeterGraph | RootSystemContext, word) -> GroupElement:
    ctx = _ctx(g)
    idx = [ctx.graph.index(s) for s in parse_word(word)]
    canon = _canonical(ctx, _reduce(ctx, idx))
    return GroupElement(ctx.graph, tuple(ctx.vertices[i] for i in canon))


def identity(g: CoxeterGraph) -> GroupElement:
    return GroupElement(g, ())


def length(e: GroupElement) -> int:
    return len(e.canonical)


def is_reduced(g, word) -> bool:
    word = parse_word(word)
    return len(canonicalize(g, word)) == len(word)


def left_descent(g, e: GroupElement, s: str) -> bool:
    """l(s e) < l(e)."""
    ctx = _ctx(g)
    letters = [ctx.graph.index(t) for t in e.canonical]
    return _exchange_index(ctx, letters, ctx.graph.index(s)) is not None


def right_descent(g, e: GroupElement, s: str) -> bool:
    """l(e s) < l(e)."""
    ctx = _ctx(g)
    letters = [ctx.graph.index(t) for t in reversed(e.canonical)]
    return _exchange_index(ctx, letters, ctx.graph.index(s)) is not None


def act(g, e: GroupElement, x: Root) -> Root:
    """w(x) in the canonical representation."""
    return _ctx(g).apply_word(e.canonical, x)


def inversion_set(g, e: GroupElement) -> frozenset[Root]:
    """Phi_w = {beta > 0 : w^{-1} beta < 0}, built letter by letter:
    Phi_{us} = Phi_u + {u(alpha_s)} whenever l(us) = l(u) + 1."""
    ctx = _ctx(g)
    out = set()
    for j, s in enumerate(e.canonical):
        out.add(ctx.apply_word(e.canonical[:j], ctx.simple(s)))
    return frozenset(out)


def weak_le(u: GroupElement, v: GroupElement) -> bool:
    """u <= v in the (right) weak order: l(v) = l(u) + l(u^{-1} v)."""
    if u.graph != v.graph:
        raise GraphError("elements over different graphs")
    return len(v) == len(u) + len(u.inverse() * v)


def longest_element(g: CoxeterGraph, T: Iterable[str] | None = None) -> GroupElement:
    """w_T, the element of maximal length of the parabolic subgroup W_T."""
    T = sorted(g.vertices if T is None else set(T))
    if not is_spherical(g, T):
        raise NotSphericalError(f"W_T is infinite for T = {T}")
    w: tuple[str, ...] = ()
    grown = True
    while grown:
        grown = False
        for t in T:
            e = GroupElement(g, w)
            if not right_descent(g, e, t):
                w = w + (t,)
                grown = True
                break
    return canonicalize(g, w)


def tau(e: GroupElement) -> tuple[str, ...]:
    """The positive word read off the canonical reduced expression."""
    return e.canonical


def enumerate_elements(g, max_length: int | None = None, cap: int = 10**6) -> list[GroupElement]:
    """Breadth-first listing of W (or of its elements up to ``max_length``)."""
    ctx = _ctx(g)
    level = [GroupElement(ctx.graph, ())]
    out = list(level)
    seen = {level[0].canonical}
    n = 0
    while level and (max_length is None or n < max_length):
        n += 1
        nxt = []
        for e in level:
            for s in ctx.vertices:
                if right_descent(ctx, e, s):
                    continue
                f = canonicalize(ctx, e.canonical + (s,))
                if f.canonical not in seen:
                    seen.add(f.canonical)
                    nxt.append(f)
        if len(seen) > cap:
            raise RuntimeError("element cap exceeded")
        nxt.sort(key=lambda e: e.canonical)
        out.extend(nxt)
        level = nxt
    return out
