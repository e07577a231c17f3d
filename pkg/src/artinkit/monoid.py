"""Artin monoid words: equality, left divisibility, L(f), lcm and Delta_T.

Two exact equality routes are provided. ``monoid_eq_bfs`` explores the full
braid-move closure of a word (all relations are length preserving, so the
closure is finite). The division routines use right reversing of
``d^{-1} f`` with the complement ``s \\ t = prod(t, s; m - 1)``; every
intermediate vertex of a reversing diagram divides the lcm, so capping the
vertex height at ``|f|`` turns reversing into a terminating decision
procedure for ``d | f``.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Sequence

from .coxeter import (
    GroupElement,
    canonicalize,
    longest_element,
    parse_word,
    right_descent,
    tau,
)
from .graph import INF, CoxeterGraph, is_small_type, is_spherical

Word = tuple[str, ...]

DEFAULT_CAP = 10**6
MAX_REVERSING_STEPS = 10**7


class CapExceeded(RuntimeError):
    """A bounded search gave up; the answer is unknown, not negative."""


class NoCommonMultiple(Exception):
    """Reversing reached a pair of generators with m = infinity."""


class LcmUndecided(RuntimeError):
    pass


def prod_word(a: Sequence[str], b: Sequence[str], m: int) -> Word:
    """prod(a, b; m) = a b a b ... with m factors."""
    if m < 0:
        raise ValueError("m must be >= 0")
    out: list[str] = []
    for i in range(m):
        out.extend(a if i % 2 == 0 else b)
    return tuple(out)


# braid-move closure

def _relations(g: CoxeterGraph) -> dict[tuple[str, str], tuple[Word, Word]]:
    rel = {}
    for s in g.vertices:
        for t in g.vertices:
            if s == t:
                continue
            m = g.label(s, t)
            if m == INF:
                continue
            rel[(s, t)] = (prod_word((s,), (t,), m), prod_word((t,), (s,), m))
    return rel


@lru_cache(maxsize=64)
def _relations_cached(g: CoxeterGraph):
    return _relations(g)


def braid_neighbors(g: CoxeterGraph, w: Word) -> Iterable[Word]:
    rel = _relations_cached(g)
    n = len(w)
    for i in range(n - 1):
        pair = rel.get((w[i], w[i + 1]))
        if pair is None:
            continue
        lhs, rhs = pair
        m = len(lhs)
        if i + m <= n and w[i:i + m] == lhs:
            yield w[:i] + rhs + w[i + m:]


@lru_cache(maxsize=4096)
def _closure(g: CoxeterGraph, w: Word, cap: int) -> frozenset[Word]:
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for v in braid_neighbors(g, u):
            if v not in seen:
                seen.add(v)
                if len(seen) > cap:
                    raise CapExceeded(f"braid closure exceeds {cap} words")
                queue.append(v)
    return frozenset(seen)


def braid_closure(g: CoxeterGraph, word, cap: int = DEFAULT_CAP) -> frozenset[Word]:
    """Every word equal to ``word`` in the Artin monoid."""
    return _closure(g, parse_word(word), cap)


def monoid_eq_bfs(g: CoxeterGraph, f1, f2, cap: int = DEFAULT_CAP) -> bool:
    f1, f2 = parse_word(f1), parse_word(f2)
    if len(f1) != len(f2):
        return False
    if f1 == f2:
        return True
    return f2 in braid_closure(g, f1, cap)


def left_divides_bfs(g: CoxeterGraph, d, f, cap: int = DEFAULT_CAP) -> bool:
    return left_quotient_bfs(g, d, f, cap) is not None


def left_quotient_bfs(g: CoxeterGraph, d, f, cap: int = DEFAULT_CAP) -> Word | None:
    """h with d h = f, found letter by letter in braid closures, or None."""
    d, f = parse_word(d), parse_word(f)
    for s in d:
        if not f:
            return None
        for w in sorted(braid_closure(g, f, cap)):
            if w[0] == s:
                f = w[1:]
                break
        else:
            return None
    return f


# reversing

def complement(g: CoxeterGraph, a: str, b: str) -> Word:
    """a \\ b, the word with a (a\\b) = b (b\\a) = lcm(a, b)."""
    if a == b:
        return ()
    m = g.label(a, b)
    if m == INF:
        raise NoCommonMultiple(f"{a} and {b} have no common multiple")
    return prod_word((b,), (a,), m - 1)


def reverse(g: CoxeterGraph, d, w, cap: int | None = None) -> tuple[Word, Word]:
    """Right-reverse d^{-1} w into u v^{-1}; then d u = w v = lcm(d, w).

    Raises NoCommonMultiple when reversing hits an infinite label, and
    CapExceeded when a vertex of the diagram would have length > ``cap``.
    """
    d, w = parse_word(d), parse_word(w)
    items: list[tuple[int, str]] = [(-1, a) for a in reversed(d)] + [(1, b) for b in w]
    i = 0
    h = len(d)  # length of the element reached before items[i]
    steps = 0
    while i < len(items) - 1:
        (sa, a), (sb, b) = items[i], items[i + 1]
        if sa < 0 and sb > 0:
            steps += 1
            if steps > MAX_REVERSING_STEPS:
                raise CapExceeded("reversing step limit reached")
            ab = complement(g, a, b)
            if cap is not None and h + len(ab) > cap:
                raise CapExceeded(f"common multiple longer than {cap}")
            ba = complement(g, b, a)
            items[i:i + 2] = [(1, c) for c in ab] + [(-1, c) for c in reversed(ba)]
            if i > 0:
                i -= 1
                h -= items[i][0]
            continue
        h += sa
        i += 1
    pos = tuple(x for sgn, x in items if sgn > 0)
    neg = tuple(x for sgn, x in reversed(items) if sgn < 0)
    return pos, neg


def left_quotient(g: CoxeterGraph, d, f) -> Word | None:
    """h with d h = f, or None when d does not left-divide f."""
    d, f = parse_word(d), parse_word(f)
    if len(d) > len(f) or not set(d) <= set(f):
        return None
    try:
        u, v = reverse(g, d, f, cap=len(f))
    except (CapExceeded, NoCommonMultiple):
        return None
    return u if not v else None


def left_divides(g: CoxeterGraph, d, f, method: str = "reversing",
                 cap: int = DEFAULT_CAP) -> bool:
    if method == "bfs":
        return left_divides_bfs(g, d, f, cap)
    return left_quotient(g, d, f) is not None


def monoid_eq(g: CoxeterGraph, f1, f2) -> bool:
    """Equality by division: same length and f1 | f2."""
    f1, f2 = parse_word(f1), parse_word(f2)
    return len(f1) == len(f2) and (f1 == f2 or left_quotient(g, f1, f2) == ())


def left_divisor_letters(g: CoxeterGraph, f) -> list[str]:
    f = parse_word(f)
    return [s for s in g.vertices if left_quotient(g, (s,), f) is not None]


# L(f), Delta_T, lcm

def L(g: CoxeterGraph, f) -> GroupElement:
    """The largest w in W with tau(w) left-dividing f.

    Greedy: extend w by the least s with l(ws) = l(w) + 1 and sigma_s
    dividing the current quotient tau(w) \\ f. The set of such w is a finite
    down-set with a maximum, so every maximal greedy chain ends there.
    """
    if not is_small_type(g):
        raise ValueError("L(f) is implemented for small-type graphs")
    q = parse_word(f)
    w = GroupElement(g, ())
    letters: list[str] = []
    grown = True
    while grown and q:
        grown = False
        for s in g.vertices:
            if s not in q or right_descent(g, w, s):
                continue
            nq = left_quotient(g, (s,), q)
            if nq is not None:
                letters.append(s)
                w = GroupElement(g, tuple(letters))
                q = nq
                grown = True
                break
    return canonicalize(g, letters)


def L_exhaustive(g: CoxeterGraph, f, elements: Iterable[GroupElement]) -> GroupElement:
    """max{v : tau(v) | f} by scanning a given list of elements (test oracle)."""
    f = parse_word(f)
    best = None
    for v in elements:
        if len(v) <= len(f) and left_divides(g, tau(v), f):
            if best is None or len(v) > len(best):
                best = v
    return best


def delta(g: CoxeterGraph, T: Iterable[str] | None = None) -> Word:
    """Delta_T, the lcm of {sigma_t : t in T}."""
    T = sorted(g.vertices if T is None else set(T))
    if not is_spherical(g, T):
        from .coxeter import NotSphericalError

        raise NotSphericalError(f"W_T is infinite for T = {T}")
    if is_small_type(g):
        return tau(longest_element(g, T))
    acc: Word = ()
    for t in T:
        acc = acc + reverse(g, acc, (t,))[0]
    return acc


def lcm(g: CoxeterGraph, f1, f2, length_cap: int = 200) -> Word | None:
    """The least common multiple of f1 and f2, or None if none exists.

    Raises LcmUndecided when no witness of length <= ``length_cap`` was found
    and nonexistence could not be certified.
    """
    f1, f2 = parse_word(f1), parse_word(f2)
    if len(f1) == 1 and len(f2) == 1:
        s, t = f1[0], f2[0]
        if s == t:
            return f1
        m = g.label(s, t)
        return None if m == INF else prod_word(f1, f2, m)
    # a common multiple is divisible by every generator dividing f1 or f2
    heads = set(left_divisor_letters(g, f1)) | set(left_divisor_letters(g, f2))
    if not is_spherical(g, heads):
        return None
    try:
        u, _ = reverse(g, f1, f2, cap=length_cap)
    except NoCommonMultiple:
        return None
    except CapExceeded:
        raise LcmUndecided(f"no common multiple of length <= {length_cap} found") from None
    return f1 + u
