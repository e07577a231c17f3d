"""Coxeter graphs: construction, JSON interchange, structural predicates and
spherical-type detection via the classification of finite Coxeter groups."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

INF = math.inf


class GraphError(ValueError):
    pass


def _label_ok(m) -> bool:
    if m == INF:
        return True
    return isinstance(m, int) and not isinstance(m, bool) and m >= 2


@dataclass(frozen=True)
class CoxeterGraph:
    """A Coxeter graph on string vertices.

    ``labels`` only records pairs with m >= 3 (or infinity), keyed by the
    sorted vertex pair; every other pair of distinct vertices has label 2.
    Vertices are kept in lexicographic order, which is the tie-breaking
    order used everywhere else in the package.
    """

    vertices: tuple[str, ...]
    labels: Mapping[tuple[str, str], float] = field(default_factory=dict)

    def __post_init__(self):
        verts = tuple(sorted(self.vertices))
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertices")
        clean = {}
        for (u, v), m in dict(self.labels).items():
            if u not in verts or v not in verts:
                raise GraphError(f"edge ({u}, {v}) references an unknown vertex")
            if u == v:
                raise GraphError(f"loop at {u}")
            if not _label_ok(m):
                raise GraphError(f"invalid label {m!r} on ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in clean and clean[key] != m:
                raise GraphError(f"conflicting labels on {key}")
            if m != 2:
                clean[key] = m
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "labels", dict(sorted(clean.items())))
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(verts)})

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple]) -> "CoxeterGraph":
        """Build from ``(u, v, m)`` triples; pairs not listed get label 2."""
        return cls(tuple(vertices), {(u, v): m for u, v, m in edges})

    def __hash__(self):
        return hash((self.vertices, tuple(self.labels.items())))

    def __eq__(self, other):
        if not isinstance(other, CoxeterGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.labels == other.labels

    def __len__(self):
        return len(self.vertices)

    def index(self, s: str) -> int:
        try:
            return self._index[s]
        except KeyError:
            raise GraphError(f"unknown vertex {s!r}") from None

    def label(self, s: str, t: str) -> float:
        if s == t:
            return 1
        self.index(s), self.index(t)
        return self.labels.get((s, t) if s < t else (t, s), 2)

    def neighbors(self, s: str) -> list[str]:
        """Vertices joined to ``s`` by an edge (label >= 3 or infinity)."""
        return [t for t in self.vertices if t != s and self.label(s, t) != 2]

    def edges(self) -> list[tuple[str, str, float]]:
        return [(u, v, m) for (u, v), m in self.labels.items()]

    def subgraph(self, T: Iterable[str]) -> "CoxeterGraph":
        T = set(T)
        for t in T:
            self.index(t)
        return CoxeterGraph(
            tuple(T), {k: m for k, m in self.labels.items() if k[0] in T and k[1] in T}
        )

    def components(self, T: Iterable[str] | None = None) -> list[list[str]]:
        """Connected components of the full subgraph on ``T``."""
        T = set(self.vertices if T is None else T)
        seen: set[str] = set()
        comps = []
        for v in sorted(T):
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.neighbors(u):
                    if w in T and w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [
                {"u": u, "v": v, "m": "inf" if m == INF else m} for u, v, m in self.edges()
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def graph_from_dict(doc: dict) -> CoxeterGraph:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise GraphError("graph document must be an object with a 'vertices' list")
    verts = doc["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise GraphError("'vertices' must be a list of strings")
    if len(set(verts)) != len(verts):
        raise GraphError("duplicate vertices")
    vset = set(verts)
    labels: dict[tuple[str, str], float] = {}
    for e in doc.get("edges", []):
        try:
            u, v, m = e["u"], e["v"], e["m"]
        except (KeyError, TypeError):
            raise GraphError(f"malformed edge {e!r}") from None
        if u not in vset or v not in vset:
            raise GraphError(f"edge ({u}, {v}) references an unknown vertex")
        if m == "inf":
            m = INF
        elif not isinstance(m, int) or isinstance(m, bool):
            raise GraphError(f"label must be an integer or 'inf', got {m!r}")
        elif m < 3:
            raise GraphError(f"label {m} on ({u}, {v}): labels below 3 must be implicit")
        key = (u, v) if u < v else (v, u)
        if key in labels and labels[key] != m:
            raise GraphError(f"asymmetric duplicate edges on {key}")
        labels[key] = m
    return CoxeterGraph(tuple(verts), labels)


def parse_graph(text: str) -> CoxeterGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    return graph_from_dict(doc)


def load_graph(path) -> CoxeterGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def is_small_type(g: CoxeterGraph) -> bool:
    return all(m == 3 for m in g.labels.values())


def has_no_triangle(g: CoxeterGraph) -> bool:
    adj = {s: set(g.neighbors(s)) for s in g.vertices}
    for s in g.vertices:
        for t, r in combinations(sorted(adj[s]), 2):
            if r in adj[t]:
                return False
    return True


def _is_finite_component(g: CoxeterGraph, comp: list[str]) -> bool:
    n = len(comp)
    if n == 1:
        return True
    edges = [(u, v, m) for (u, v), m in g.labels.items() if u in comp and v in comp]
    if any(m == INF for _, _, m in edges):
        return False
    if len(edges) != n - 1:
        # connected with a cycle
        return False
    if n == 2:
        return True  # I_2(m)
    deg = {v: 0 for v in comp}
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    big = [(u, v, m) for u, v, m in edges if m > 3]
    branch = [v for v in comp if deg[v] >= 3]
    if not big:
        if not branch:
            return True  # A_n
        if len(branch) > 1 or deg[branch[0]] > 3:
            return False
        arms = sorted(_arm_lengths(g, comp, branch[0]))
        if arms[0] == 1 and arms[1] == 1:
            return True  # D_n
        return arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4])  # E_6, E_7, E_8
    if len(big) > 1 or branch:
        return False
    (u, v, m) = big[0]
    end_edge = deg[u] == 1 or deg[v] == 1
    if m == 4:
        # B_n with the 4 at an end, or F_4 with it in the middle
        return end_edge or n == 4
    if m == 5:
        return end_edge and n in (3, 4)  # H_3, H_4
    return False


def _arm_lengths(g: CoxeterGraph, comp: list[str], center: str) -> list[int]:
    lengths = []
    for start in g.neighbors(center):
        if start not in comp:
            continue
        prev, cur, k = center, start, 1
        while True:
            nxt = [w for w in g.neighbors(cur) if w != prev and w in comp]
            if not nxt:
                break
            prev, cur, k = cur, nxt[0], k + 1
        lengths.append(k)
    return lengths


def is_spherical(g: CoxeterGraph, T: Iterable[str] | None = None) -> bool:
    """True iff the parabolic subgroup generated by ``T`` is finite."""
    T = list(g.vertices if T is None else T)
    for t in T:
        g.index(t)
    return all(_is_finite_component(g, comp) for comp in g.components(T))


def chain(n: int, m: int = 3, prefix: str = "") -> CoxeterGraph:
    """The path graph on vertices ``1..n`` (zero-padded) with all labels ``m``."""
    width = len(str(n))
    names = [f"{prefix}{i:0{width}d}" for i in range(1, n + 1)]
    return CoxeterGraph.from_edges(names, [(a, b, m) for a, b in zip(names, names[1:])])
