"""Fold a graph twice and test, on seeded random pairs of inequivalent
equal-length words, that their images stay inequivalent in the target."""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from artinkit.closed import eq_via_decode
from artinkit.fold import apply_morphism, check_respects_lcm, fold_to_small_no_triangle
from artinkit.graph import has_no_triangle, is_small_type, load_graph
from artinkit.monoid import monoid_eq_bfs

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class FoldConfig:
    graph: str = str(ROOT / "graphs" / "edge_m4.json")
    pairs: int = 20
    max_len: int = 4
    seed: int = 0


def run(cfg: FoldConfig) -> dict:
    g = load_graph(cfg.graph)
    t0 = time.perf_counter()
    phi = fold_to_small_no_triangle(g)
    lcm_report = check_respects_lcm(phi.stages[0])
    rng = random.Random(cfg.seed)
    tested = merged = 0
    while tested < cfg.pairs:
        n = rng.randint(1, cfg.max_len)
        f = tuple(rng.choice(g.vertices) for _ in range(n))
        h = tuple(rng.choice(g.vertices) for _ in range(n))
        if monoid_eq_bfs(g, f, h):
            continue
        tested += 1
        if eq_via_decode(phi.target, apply_morphism(phi, f), apply_morphism(phi, h)):
            merged += 1
    return {
        "config": asdict(cfg),
        "target_vertices": len(phi.target),
        "small_type": is_small_type(phi.target),
        "no_triangle": has_no_triangle(phi.target),
        "respects_lcm": lcm_report.ok,
        "pairs": tested,
        "merged_pairs": merged,
        "seconds": round(time.perf_counter() - t0, 2),
    }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--graph", default=FoldConfig.graph)
    p.add_argument("--pairs", type=int, default=FoldConfig.pairs)
    p.add_argument("--max-len", type=int, default=FoldConfig.max_len)
    p.add_argument("--seed", type=int, default=FoldConfig.seed)
    args = p.parse_args(argv)
    res = run(FoldConfig(args.graph, args.pairs, args.max_len, args.seed))
    print(json.dumps(res, indent=2))
    good = res["small_type"] and res["no_triangle"] and res["respects_lcm"] and not res["merged_pairs"]
    return 0 if good else 1


if __name__ == "__main__":
    sys.exit(main())
