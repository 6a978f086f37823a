"""JSON and Graphviz emission; all output is byte-stable for equal inputs."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .coloring import EdgeColoring, coloring_for
from .graph import Graph, GraphError, graph_from_json

DOT_COLORS = (
    "black",
    "red",
    "blue",
    "forestgreen",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan4",
    "gold3",
    "gray50",
    "navy",
)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None


def read_graph(path: str | Path) -> Graph:
    """A graph object, or the ``graph`` field of a construction file."""
    obj = load_json(path)
    if isinstance(obj, dict) and "graph" in obj:
        obj = obj["graph"]
    if not isinstance(obj, dict):
        raise GraphError(f"{path}: expected a graph object with fields 'n' and 'edges'")
    return graph_from_json(obj)


def read_coloring(path: str | Path, g: Graph) -> EdgeColoring:
    """A JSON list of colors, or the ``colors``/``palette`` fields of a construction file."""
    obj = load_json(path)
    palette = None
    if isinstance(obj, dict):
        if "colors" not in obj:
            raise GraphError(f"{path}: missing field 'colors'")
        palette = obj.get("palette")
        obj = obj["colors"]
    if not isinstance(obj, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in obj):
        raise GraphError(f"{path}: field 'colors' must be a list of integers")
    if palette is not None and not isinstance(palette, int):
        raise GraphError(f"{path}: field 'palette' must be an integer")
    if any(c < 1 for c in obj):
        raise GraphError(f"{path}: field 'colors' holds a non-positive color")
    if palette is not None:
        palette = max(palette, max(obj, default=1))
    return coloring_for(g, obj, palette)


def to_dot(g: Graph, coloring: EdgeColoring | None = None, labels: dict[int, str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = labels.get(v, str(v)) if labels else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for i, (u, v) in enumerate(g.edges):
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            c = coloring[i]
            lines.append(f'  {u} -- {v} [label="{c}", color="{DOT_COLORS[(c - 1) % len(DOT_COLORS)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
