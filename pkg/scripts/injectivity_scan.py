"""Partition all positive words up to a length into braid classes by BFS and
check that decoding is constant on classes and distinct across them."""
from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from artinkit.closed import decode
from artinkit.graph import load_graph
from artinkit.monoid import braid_closure

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class ScanConfig:
    graph: str = str(ROOT / "graphs" / "A3.json")
    max_len: int = 5
    cap: int = 10**6


def scan(cfg: ScanConfig) -> dict:
    g = load_graph(cfg.graph)
    t0 = time.perf_counter()
    owner: dict[tuple, int] = {}
    codes: dict[tuple, int] = {}
    classes = collisions = 0
    for n in range(cfg.max_len + 1):
        for w in itertools.product(g.vertices, repeat=n):
            if w in owner:
                continue
            cls = braid_closure(g, w, cfg.cap)
            for u in cls:
                owner[u] = classes
            found = {tuple(u.canonical for u in decode(g, v)) for v in cls}
            collisions += len(found) - 1
            for code in found:
                if code in codes:
                    collisions += 1
                codes[code] = classes
            classes += 1
    return {"config": asdict(cfg), "words": len(owner), "classes": classes,
            "collisions": collisions, "seconds": round(time.perf_counter() - t0, 2)}


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--graph", default=ScanConfig.graph)
    p.add_argument("--max-len", type=int, default=ScanConfig.max_len)
    args = p.parse_args(argv)
    result = scan(ScanConfig(graph=args.graph, max_len=args.max_len))
    print(json.dumps(result, indent=2))
    return 0 if result["collisions"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
