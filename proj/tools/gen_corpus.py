#!/usr/bin/env python3
"""Regenerates fixtures/connected_le7.graphs from the networkx graph atlas.

Every connected graph on 1..7 vertices appears once (up to isomorphism).
Each graph is a block that starts with an "n=<count>" header line followed
by one "u v" line per edge.
"""
import sys

import networkx as nx


def main(path):
    graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1 and nx.is_connected(g)]
    with open(path, "w") as out:
        out.write("# connected graphs on 1..7 vertices, networkx graph atlas order\n")
        out.write(f"# count: {len(graphs)}\n")
        for g in graphs:
            out.write(f"n={g.number_of_nodes()}\n")
            for u, v in sorted(tuple(sorted(e)) for e in g.edges()):
                out.write(f"{u} {v}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures/connected_le7.graphs")
