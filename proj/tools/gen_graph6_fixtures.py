#!/usr/bin/env python3
"""Writes graph6 reference encodings produced by networkx.

graph6_n5.txt     every labeled graph on 1..5 vertices: "<n> <mask> <graph6>",
                  mask bit k set when the k-th pair of (0,1), (0,2), (1,2),
                  (0,3), ... is an edge.
graph6_random.txt seeded random graphs on 6..64 vertices:
                  "<n> <u-v,...|-> <graph6>".
"""
import random
import sys
from pathlib import Path

import networkx as nx


def pairs(n):
    return [(i, j) for j in range(1, n) for i in range(j)]


def encode(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.to_graph6_bytes(g, nodes=list(range(n)), header=False).decode().strip()


def main(out_dir):
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "graph6_n5.txt", "w") as f:
        for n in range(1, 6):
            ps = pairs(n)
            for mask in range(1 << len(ps)):
                edges = [p for k, p in enumerate(ps) if mask >> k & 1]
                f.write(f"{n} {mask} {encode(n, edges)}\n")

    rng = random.Random(20181)
    with open(out_dir / "graph6_random.txt", "w") as f:
        orders = list(range(6, 21)) + [30, 62, 63, 64]
        for n in orders:
            for density in (0.1, 0.5, 0.9):
                edges = [p for p in pairs(n) if rng.random() < density]
                text = ",".join(f"{u}-{v}" for u, v in edges) or "-"
                f.write(f"{n} {text} {encode(n, edges)}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "fixtures")
