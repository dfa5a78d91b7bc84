#!/usr/bin/env python3
"""Regenerate the bundled corpus: every connected graph on 7 vertices,
one graph6 line each, taken from the networkx Graph Atlas and sorted."""

import sys
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main() -> int:
    out = Path(__file__).resolve().parent.parent / "src" / "cdgame" / "data" / "graphs7.g6"
    lines = []
    for g in graph_atlas_g():
        if g.number_of_nodes() == 7 and nx.is_connected(g):
            line = nx.to_graph6_bytes(g, header=False).decode("ascii").strip()
            lines.append(line)
    lines.sort()
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines)} graphs to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
