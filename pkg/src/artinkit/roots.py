"""Root systems of small-type Coxeter graphs as exact integer vectors.

In small type the bilinear form takes the values 2, 0, -1 on simple roots,
so every root has integer coordinates and every pairing is an integer.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import CoxeterGraph, is_small_type


class RootError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Root:
    """Coefficient vector over the simple roots, in the graph's vertex order."""

    coeffs: tuple[int, ...]

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, k: int) -> "Root":
        return Root(tuple(k * c for c in self.coeffs))

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs) and any(self.coeffs)

    @property
    def is_negative(self) -> bool:
        return all(c <= 0 for c in self.coeffs) and any(self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)


class RootSystemContext:
    """Pairing, reflections and depth for the root system of a small-type graph.

    Depths are memoized. A vector is accepted as a root iff repeatedly applying
    a simple reflection with positive pairing (which lowers the depth by one)
    reaches a simple root; the number of steps plus one is the depth.
    """

    def __init__(self, graph: CoxeterGraph):
        if not is_small_type(graph):
            raise RootError("root systems are only supported for small-type graphs")
        self.graph = graph
        self.vertices = graph.vertices
        self.rank = len(graph.vertices)
        self._adj = [
            tuple(graph.index(t) for t in graph.neighbors(s)) for s in graph.vertices
        ]
        self._simple = [
            Root(tuple(1 if j == i else 0 for j in range(self.rank))) for i in range(self.rank)
        ]
        self._depth: dict[Root, int] = {r: 1 for r in self._simple}
        self._levels: list[list[Root]] = [list(self._simple)]
        self._lock = threading.Lock()

    # construction and serialization

    def simple(self, s: str) -> Root:
        return self._simple[self.graph.index(s)]

    def vector(self, coeffs: Mapping[str, int] | Iterable[int]) -> Root:
        """An unvalidated coefficient vector."""
        if isinstance(coeffs, Mapping):
            vec = [0] * self.rank
            for s, c in coeffs.items():
                vec[self.graph.index(s)] = int(c)
            return Root(tuple(vec))
        vec = tuple(int(c) for c in coeffs)
        if len(vec) != self.rank:
            raise RootError(f"expected {self.rank} coefficients, got {len(vec)}")
        return Root(vec)

    def root(self, coeffs) -> Root:
        """A validated root, positive or negative."""
        r = coeffs if isinstance(coeffs, Root) else self.vector(coeffs)
        if not self.is_root(r):
            raise RootError(f"{self.to_dict(r)} is not a root")
        return r

    def to_dict(self, r: Root) -> dict[str, int]:
        return {s: c for s, c in zip(self.vertices, r.coeffs) if c}

    def from_dict(self, d: Mapping[str, int]) -> Root:
        return self.root(d)

    def format(self, r: Root) -> str:
        terms = []
        for s, c in zip(self.vertices, r.coeffs):
            if c:
                terms.append(f"a_{s}" if c == 1 else f"{c}a_{s}")
        return "+".join(terms).replace("+-", "-") or "0"

    def sort_key(self, r: Root):
        return (self.depth(r), tuple(-c for c in r.coeffs))

    # the form and the reflections

    def pair_simple(self, s: str | int, x: Root) -> int:
        """<alpha_s, x>."""
        i = s if isinstance(s, int) else self.graph.index(s)
        c = x.coeffs
        return 2 * c[i] - sum(c[j] for j in self._adj[i])

    def pairing(self, x: Root, y: Root) -> int:
        return sum(yc * self.pair_simple(i, x) for i, yc in enumerate(y.coeffs) if yc)

    def reflect_simple(self, s: str | int, x: Root) -> Root:
        """s(x) = x - <alpha_s, x> alpha_s; only the s-coordinate changes."""
        i = s if isinstance(s, int) else self.graph.index(s)
        p = self.pair_simple(i, x)
        if p == 0:
            return x
        c = list(x.coeffs)
        c[i] -= p
        return Root(tuple(c))

    def reflect_by_root(self, beta: Root, x: Root) -> Root:
        p = self.pairing(x, beta)
        if p == 0:
            return x
        return x - beta.scaled(p)

    def apply_word(self, word: Iterable[str], x: Root) -> Root:
        """Apply the group element s_1 s_2 ... s_k to x (last letter first)."""
        for s in reversed(list(word)):
            x = self.reflect_simple(s, x)
        return x

    # depth and membership

    def descents(self, beta: Root) -> list[int]:
        """Indices t with <alpha_t, beta> > 0, i.e. dp(t.beta) = dp(beta) - 1."""
        return [i for i in range(self.rank) if self.pair_simple(i, beta) > 0]

    def _descend(self, beta: Root) -> int | None:
        path = []
        cur = beta
        while cur not in self._depth:
            if not cur.is_positive:
                return None
            down = self.descents(cur)
            if not down:
                return None
            path.append(cur)
            cur = self.reflect_simple(down[0], cur)
        d = self._depth[cur]
        with self._lock:
            for r in reversed(path):
                d += 1
                self._depth[r] = d
        return self._depth[beta]

    def is_root(self, x: Root) -> bool:
        if len(x.coeffs) != self.rank:
            return False
        if x.is_negative:
            x = -x
        return self._descend(x) is not None

    def depth(self, beta: Root) -> int:
        d = self._depth.get(beta)
        if d is None:
            d = self._descend(beta)
            if d is None:
                raise RootError(f"{self.format(beta)} is not a positive root")
        return d

    def is_simple(self, beta: Root) -> bool:
        return beta in self._depth and self._depth[beta] == 1

    # enumeration

    def _extend_levels(self, max_depth: int) -> None:
        with self._lock:
            while len(self._levels) < max_depth:
                frontier = self._levels[-1]
                if not frontier:
                    self._levels.append([])
                    continue
                d = len(self._levels) + 1
                seen = set()
                nxt = []
                for gamma in frontier:
                    for i in range(self.rank):
                        if self.pair_simple(i, gamma) < 0:
                            beta = self.reflect_simple(i, gamma)
                            if beta not in seen:
                                seen.add(beta)
                                nxt.append(beta)
                                self._depth[beta] = d
                nxt.sort(key=lambda r: tuple(-c for c in r.coeffs))
                self._levels.append(nxt)

    def roots_of_depth(self, d: int) -> list[Root]:
        self._extend_levels(d)
        return list(self._levels[d - 1])

    def enumerate_positive_roots(self, max_depth: int) -> list[Root]:
        """All positive roots of depth <= max_depth, sorted by (depth, coefficients).

        Breadth-first from the simple roots: a root of depth d+1 is s(gamma)
        for some gamma of depth d with <alpha_s, gamma> < 0.
        """
        if max_depth < 1:
            raise RootError("max_depth must be >= 1")
        self._extend_levels(max_depth)
        out = []
        for level in self._levels[:max_depth]:
            out.extend(level)
        return out

    def is_finite(self, probe: int = 64) -> bool:
        """True when the root system is exhausted before depth ``probe``.

        A coefficient above 6 settles infiniteness early: every positive root
        of a finite simply-laced system has coefficients <= 6 (E8 attains 6),
        and hyperbolic systems grow too fast to probe to depth 64.
        """
        for d in range(1, probe + 1):
            self._extend_levels(d)
            level = self._levels[d - 1]
            if not level:
                return True
            if any(c > 6 for r in level for c in r.coeffs):
                return False
        return False

    def all_positive_roots(self, probe: int = 64) -> list[Root]:
        if not self.is_finite(probe):
            raise RootError("root system is infinite")
        return self.enumerate_positive_roots(probe)


_CONTEXTS: dict[CoxeterGraph, RootSystemContext] = {}
_CONTEXTS_LOCK = threading.Lock()


def root_context(graph: CoxeterGraph) -> RootSystemContext:
    """The shared context for ``graph`` (one per graph, created on demand)."""
    ctx = _CONTEXTS.get(graph)
    if ctx is None:
        with _CONTEXTS_LOCK:
            ctx = _CONTEXTS.setdefault(graph, RootSystemContext(graph))
    return ctx
