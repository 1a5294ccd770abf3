"""Download the dolphins and college-football networks and write them as
edge lists next to this script.

    python3 data/fetch.py
    COHESION_DATA_DIR=data cargo test -p cohesion --test acceptance
"""

import io
import sys
import urllib.request
import zipfile
from pathlib import Path

import networkx as nx

SOURCES = {
    "dolphins": "http://www-personal.umich.edu/~mejn/netdata/dolphins.zip",
    "football": "http://www-personal.umich.edu/~mejn/netdata/football.zip",
}


def load(name, url):
    with urllib.request.urlopen(url, timeout=60) as resp:
        archive = zipfile.ZipFile(io.BytesIO(resp.read()))
    text = archive.read(f"{name}.gml").decode()
    # the football file starts with a free-text line before the graph
    lines = text.split("\n")
    start = next(i for i, line in enumerate(lines) if line.strip().startswith("graph"))
    return nx.parse_gml(lines[start:], label="id")


def main():
    out = Path(__file__).resolve().parent
    for name, url in SOURCES.items():
        g = nx.Graph(load(name, url))
        g.remove_edges_from(nx.selfloop_edges(g))
        path = out / f"{name}.edgelist"
        with path.open("w") as f:
            f.write(f"# {name}: {g.number_of_nodes()} nodes, {g.number_of_edges()} edges\n")
            for u, v in g.edges():
                f.write(f"{u} {v}\n")
        print(f"wrote {path}", file=sys.stderr)


if __name__ == "__main__":
    main()
