"""Folding an arbitrary Coxeter graph into small type with no triangle.

Each vertex s is blown up into a set I(s) of 2N vertices, N being the lcm of
the finite labels minus one. The pair {s, t} becomes (2N/(m-1)) copies of
Gamma(m) (two A_{m-1} chains, bipartite on I and J) when m is finite, and N
copies of Gamma(inf) (a 4-cycle with labels 3) when m is infinite. The
monoid morphism sends sigma_s to the product of the sigma_i, i in I(s).

Gamma vertices are matched to I(s) and I(t) so that every edge joins an
even-indexed vertex to an odd-indexed one whenever the copies allow it; in
particular the fold of a small-type graph is bipartite, hence triangle-free.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import lcm as int_lcm

from .closed import eq_via_decode
from .coxeter import parse_word
from .graph import (
    INF,
    CoxeterGraph,
    graph_from_dict,
    has_no_triangle,
    is_small_type,
    is_spherical,
)
from .monoid import (
    DEFAULT_CAP,
    CapExceeded,
    LcmUndecided,
    delta,
    lcm,
    monoid_eq,
    monoid_eq_bfs,
    prod_word,
)
from .report import VerificationReport


class FoldError(ValueError):
    pass


# the building blocks

def _gamma_layout(m: int):
    """Nodes (chain, position, role) of Gamma(m) and its chain edges."""
    n = m - 1
    nodes = []
    for chain in (0, 1):
        for p in range(1, n + 1):
            odd = p % 2 == 1
            role = ("I" if odd else "J") if chain == 0 else ("J" if odd else "I")
            nodes.append((chain, p, role))
    edges = [((c, p), (c, p + 1)) for c in (0, 1) for p in range(1, n)]
    return nodes, edges


def _gamma_name(chain: int, p: int, width: int) -> str:
    return f"{'ab'[chain]}{p:0{width}d}"


def build_gamma_m(m: int) -> tuple[CoxeterGraph, list[str], list[str]]:
    """Gamma(m): two disjoint A_{m-1} chains, I and J alternating along each,
    phased oppositely so that |I| = |J| = m - 1."""
    if not isinstance(m, int) or m < 3:
        raise FoldError("Gamma(m) needs an integer m >= 3")
    width = len(str(m - 1))
    nodes, edges = _gamma_layout(m)
    name = {(c, p): _gamma_name(c, p, width) for c, p, _ in nodes}
    g = CoxeterGraph.from_edges(name.values(), [(name[u], name[v], 3) for u, v in edges])
    I = sorted(name[(c, p)] for c, p, r in nodes if r == "I")
    J = sorted(name[(c, p)] for c, p, r in nodes if r == "J")
    return g, I, J


_INF_NODES = ["i1", "j1", "i2", "j2"]


def build_gamma_inf() -> tuple[CoxeterGraph, list[str], list[str]]:
    """Gamma(inf): the 4-cycle i1 - j1 - i2 - j2 - i1, all labels 3."""
    cyc = _INF_NODES + _INF_NODES[:1]
    g = CoxeterGraph.from_edges(_INF_NODES, [(u, v, 3) for u, v in zip(cyc, cyc[1:])])
    return g, ["i1", "i2"], ["j1", "j2"]


def disjoint_copies(k: int, g: CoxeterGraph) -> CoxeterGraph:
    """k disjoint copies of g, vertex v of copy c renamed 'v#c'."""
    if k < 1:
        raise FoldError("k must be >= 1")
    verts = [f"{v}#{c}" for c in range(k) for v in g.vertices]
    edges = [(f"{u}#{c}", f"{v}#{c}", m) for c in range(k) for u, v, m in g.edges()]
    return CoxeterGraph.from_edges(verts, edges)


def copies_classes(k: int, cls: list[str]) -> list[str]:
    return [f"{v}#{c}" for c in range(k) for v in cls]


def alternating_generators(g: CoxeterGraph, I, J) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """f = prod of sigma_i over I, g = prod over J (each in vertex order)."""
    order = {v: n for n, v in enumerate(g.vertices)}
    return tuple(sorted(I, key=order.get)), tuple(sorted(J, key=order.get))


# morphisms

@dataclass(frozen=True)
class FoldMorphism:
    source: CoxeterGraph
    target: CoxeterGraph
    generator_map: dict[str, tuple[str, ...]]
    stages: tuple["FoldMorphism", ...] = field(default=(), compare=False)

    def image(self, s: str) -> tuple[str, ...]:
        try:
            return self.generator_map[s]
        except KeyError:
            raise FoldError(f"unknown letter {s!r}") from None

    def to_dict(self) -> dict:
        return {"target": self.target.to_dict(), "map": {s: list(v) for s, v in self.generator_map.items()}}

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def morphism_from_dict(source: CoxeterGraph, doc: dict) -> FoldMorphism:
    target = graph_from_dict(doc["target"])
    return FoldMorphism(source, target, {s: tuple(v) for s, v in doc["map"].items()})


def fold_N(g: CoxeterGraph) -> int:
    """lcm of {m - 1 : m finite label}; 1 when there is none."""
    return int_lcm(1, *(int(m) - 1 for _, _, m in g.edges() if m != INF))


def _match(nodes: list[tuple[object, int]], targets: list[str]) -> dict[object, str]:
    """Biject nodes (key, colour) onto targets, colour c to index parity c
    where the counts allow it."""
    even = [v for n, v in enumerate(targets) if n % 2 == 0]
    odd = [v for n, v in enumerate(targets) if n % 2 == 1]
    by_colour = [[k for k, c in nodes if c == 0], [k for k, c in nodes if c == 1]]
    if len(by_colour[0]) == len(even):
        return dict(zip(by_colour[0] + by_colour[1], even + odd))
    return dict(zip([k for k, _ in nodes], targets))


def fold_once(g: CoxeterGraph) -> FoldMorphism:
    if not g.vertices:
        raise FoldError("cannot fold the empty graph")
    N = fold_N(g)
    width = len(str(2 * N - 1))
    I_of = {s: [f"{s}#{k:0{width}d}" for k in range(2 * N)] for s in g.vertices}
    edges = []
    for s, t, m in g.edges():
        if m == INF:
            # i1, i2 share a colour, j1, j2 the other; alternate per copy
            inodes = [((copy, v), (copy % 2)) for copy in range(N) for v in ("i1", "i2")]
            jnodes = [((copy, v), 1 - (copy % 2)) for copy in range(N) for v in ("j1", "j2")]
            name = {**_match(inodes, I_of[s]), **_match(jnodes, I_of[t])}
            cyc = _INF_NODES + _INF_NODES[:1]
            for copy in range(N):
                for u, v in zip(cyc, cyc[1:]):
                    edges.append((name[(copy, u)], name[(copy, v)], 3))
        else:
            k = 2 * N // (m - 1)
            nodes, chain_edges = _gamma_layout(int(m))
            flip = (m - 1) % 2 == 1
            inodes, jnodes = [], []
            for copy in range(k):
                c0 = copy % 2 if flip else 0
                for chain, p, role in nodes:
                    entry = ((copy, chain, p), (p + c0) % 2)
                    (inodes if role == "I" else jnodes).append(entry)
            name = {**_match(inodes, I_of[s]), **_match(jnodes, I_of[t])}
            for copy in range(k):
                for (c1, p1), (c2, p2) in chain_edges:
                    edges.append((name[(copy, c1, p1)], name[(copy, c2, p2)], 3))
    target = CoxeterGraph.from_edges([v for s in g.vertices for v in I_of[s]], edges)
    order = {v: n for n, v in enumerate(target.vertices)}
    gmap = {s: tuple(sorted(I_of[s], key=order.get)) for s in g.vertices}
    return FoldMorphism(g, target, gmap)


def compose(second: FoldMorphism, first: FoldMorphism) -> FoldMorphism:
    """second o first; each image keeps the nested emission order."""
    if first.target != second.source:
        raise FoldError("morphisms do not compose")
    gmap = {
        s: tuple(x for i in img for x in second.image(i))
        for s, img in first.generator_map.items()
    }
    return FoldMorphism(first.source, second.target, gmap,
                        stages=(first.stages or (first,)) + (second.stages or (second,)))


def fold_to_small_no_triangle(g: CoxeterGraph) -> FoldMorphism:
    first = fold_once(g)
    second = fold_once(first.target)
    out = compose(second, first)
    assert is_small_type(out.target) and has_no_triangle(out.target)
    return out


def apply_morphism(phi: FoldMorphism, f) -> tuple[str, ...]:
    return tuple(x for s in parse_word(f) for x in phi.image(s))


# respecting lcm's

def _words_equal(target: CoxeterGraph, u, v, cap: int) -> bool:
    if is_small_type(target) and has_no_triangle(target):
        return eq_via_decode(target, u, v)
    return monoid_eq_bfs(target, u, v, cap)


def check_respects_lcm(phi: FoldMorphism, cap: int = DEFAULT_CAP,
                       lcm_cap: int = 400) -> VerificationReport:
    """The three conditions under which a monoid morphism is injective:
    nontrivial images; images of sigma_s, sigma_t have a common multiple iff
    m < inf; and then phi(prod(s, t; m)) is the lcm of the images."""
    src, tgt = phi.source, phi.target
    rep = VerificationReport("respects-lcm", f"fold of {len(src)}-vertex graph",
                             {"cap": cap, "target_vertices": len(tgt)})
    empty = [s for s in src.vertices if not phi.image(s)]
    rep.tally("phi(sigma_s) != 1", empty, len(src))
    vs = src.vertices
    for a, s in enumerate(vs):
        for t in vs[a + 1:]:
            m = src.label(s, t)
            fs, ft = phi.image(s), phi.image(t)
            support = sorted(set(fs) | set(ft))
            if m == INF:
                nonsph = not is_spherical(tgt, support)
                rep.add(f"{s},{t} (m=inf): image support not spherical", nonsph,
                        counterexample=None if nonsph else support)
                try:
                    none = lcm(tgt, fs, ft, length_cap=lcm_cap) is None
                except LcmUndecided:
                    none = False
                rep.add(f"{s},{t} (m=inf): images have no common multiple", none)
                continue
            lhs = apply_morphism(phi, prod_word((s,), (t,), int(m)))
            rhs_alt = apply_morphism(phi, prod_word((t,), (s,), int(m)))
            try:
                d = delta(tgt, support)
                ok = _words_equal(tgt, lhs, d, cap) and _words_equal(tgt, rhs_alt, d, cap)
                rep.add(f"{s},{t} (m={m}): phi(prod) = Delta(image support)", ok,
                        counterexample=None if ok else {"lhs": lhs, "delta": d})
            except CapExceeded as exc:
                rep.add(f"{s},{t} (m={m}): phi(prod) = Delta(image support)", False,
                        counterexample=f"cap exceeded: {exc}")
                continue
            try:
                l = lcm(tgt, fs, ft, length_cap=lcm_cap)
                ok = l is not None and monoid_eq(tgt, l, lhs)
            except LcmUndecided:
                ok = False
            rep.add(f"{s},{t} (m={m}): lcm of images = phi(prod)", ok)
    return rep.finish()
