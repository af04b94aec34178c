"""Serialization: JSON interchange for graphs, digraphs, colorings and
set families, plus the DIMACS .col format.

The JSON graph document is {"n": int, "labels": [str...], "edges":
[[u, v]...]} with exactly one of "edges"/"arcs" present; vertex indices
are 0-based.  Structured labels are flattened to canonical strings on
write, so a round trip preserves structure only up to label identity.
All writers emit sorted keys and sorted edge lists, making output
byte-deterministic for equal inputs.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import BadParameter, Coloring, Digraph, Graph


def label_str(lab: Any) -> str:
    """Canonical flat string for a structured vertex label."""
    if isinstance(lab, str):
        return lab
    if isinstance(lab, (set, frozenset)):
        return "{" + ",".join(str(x) for x in sorted(lab)) + "}"
    if isinstance(lab, tuple):
        return "(" + ",".join(label_str(x) for x in lab) + ")"
    return str(lab)


def graph_to_dict(g: Graph) -> dict:
    return {
        "n": g.n,
        "labels": [label_str(lab) for lab in g.vertices],
        "edges": [list(e) for e in g.edge_list()],
    }


def digraph_to_dict(d: Digraph) -> dict:
    return {
        "n": d.n,
        "labels": [label_str(lab) for lab in d.vertices],
        "arcs": [list(a) for a in d.arc_list()],
    }


def graph_from_dict(doc: dict) -> Graph | Digraph:
    """Parse a JSON graph document; returns a Graph for "edges" documents
    and a Digraph for "arcs" documents."""
    if "edges" in doc and "arcs" in doc:
        raise BadParameter('document must contain exactly one of "edges"/"arcs"')
    if "edges" not in doc and "arcs" not in doc:
        raise BadParameter('document must contain one of "edges"/"arcs"')
    if "n" not in doc:
        raise BadParameter('graph document is missing "n"')
    n = int(doc["n"])
    labels = doc.get("labels")
    if labels is None:
        labels = [str(i) for i in range(n)]
    if len(labels) != n:
        raise BadParameter(f'"labels" has {len(labels)} entries, expected n={n}')
    if "edges" in doc:
        return Graph(labels, [tuple(e) for e in doc["edges"]])
    return Digraph(labels, [tuple(a) for a in doc["arcs"]])


def coloring_to_dict(c: Coloring) -> dict:
    return {"colors": list(c.colors)}


def coloring_from_dict(doc: dict) -> Coloring:
    if "colors" not in doc:
        raise BadParameter('coloring document is missing "colors"')
    return Coloring(doc["colors"])


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def save_json(doc: dict, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(doc))


def load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def json_default(obj: Any):
    """Fallback encoder for report objects (fractions become strings)."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, Coloring):
        return coloring_to_dict(obj)
    if isinstance(obj, Graph):
        return graph_to_dict(obj)
    if isinstance(obj, Digraph):
        return digraph_to_dict(obj)
    raise TypeError(f"not JSON serializable: {type(obj)!r}")


def write_dimacs(g: Graph, path: str) -> None:
    """Write the graph in DIMACS .col format (1-based vertices)."""
    edges = g.edge_list()
    with open(path, "w") as fh:
        fh.write(f"p edge {g.n} {len(edges)}\n")
        for u, v in edges:
            fh.write(f"e {u + 1} {v + 1}\n")


def read_dimacs(path: str) -> Graph:
    """Read a DIMACS .col file.  Vertices get string labels "1".."n"."""
    n = None
    edges: list[tuple[int, int]] = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "p":
                if len(parts) != 4 or parts[1] != "edge":
                    raise BadParameter(f"malformed problem line: {line!r}")
                n = int(parts[2])
            elif parts[0] == "e":
                if n is None:
                    raise BadParameter("edge line before problem line")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise BadParameter(f"edge endpoint out of range: {line!r}")
                edges.append((u - 1, v - 1))
    if n is None:
        raise BadParameter("missing problem line")
    return Graph([str(i + 1) for i in range(n)], edges)
