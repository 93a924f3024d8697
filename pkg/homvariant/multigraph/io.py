"""
JSON text format for (labelled) multigraphs.

    {"vertices": 4, "edges": [[0,1],[1,2],[1,2],[3,3]], "labels": [0,2]}

Edges are listed with multiplicity, a loop is [v, v], and "labels" is
optional (position i holds the vertex labelled i+1).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from homvariant.errors import InputError

from .graph import LabeledGraph, Multigraph


def line_of(text: str, key: str) -> int | None:
    """First line mentioning "key", for diagnostics."""
    needle = f'"{key}"'
    for number, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return number
    return None


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def load_json_document(text: str) -> dict[str, Any]:
    """Parse one JSON object, reporting syntax errors with their line."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, line=exc.lineno) from exc
    if not isinstance(document, dict):
        raise InputError("expected a JSON object", line=1)
    return document


def labeled_graph_from_dict(document: dict[str, Any], text: str = "") -> LabeledGraph:
    vertices = document.get("vertices")
    if not _is_int(vertices) or vertices < 0:
        raise InputError(
            f"expected a nonnegative integer, got {vertices!r}",
            field="vertices",
            line=line_of(text, "vertices"),
        )

    raw_edges = document.get("edges", [])
    if not isinstance(raw_edges, list):
        raise InputError("expected a list of [u, v] pairs", field="edges")
    for index, edge in enumerate(raw_edges):
        if not (isinstance(edge, list) and len(edge) == 2 and all(map(_is_int, edge))):
            raise InputError(
                f"expected [u, v] with integer endpoints, got {edge!r}",
                field=f"edges[{index}]",
                line=line_of(text, "edges"),
            )

    raw_labels = document.get("labels", [])
    if not isinstance(raw_labels, list) or not all(map(_is_int, raw_labels)):
        raise InputError(
            "expected a list of vertex ids", field="labels", line=line_of(text, "labels")
        )

    try:
        graph = Multigraph(vertices, tuple(tuple(edge) for edge in raw_edges))
        return LabeledGraph(graph, tuple(raw_labels))
    except InputError as exc:
        key = (exc.field or "").split("[")[0]
        raise InputError(
            str(exc).removeprefix(f"{exc.field}: ") if exc.field else str(exc),
            field=exc.field,
            line=line_of(text, key) if key else None,
        ) from exc


def parse_labeled_graph(text: str) -> LabeledGraph:
    return labeled_graph_from_dict(load_json_document(text), text)


def parse_multigraph(text: str) -> Multigraph:
    """Parse a graph file; labels, if present, are validated and dropped."""
    return parse_labeled_graph(text).graph


def read_labeled_graph(path: str | Path) -> LabeledGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc), field=str(path)) from exc
    return parse_labeled_graph(text)


def read_multigraph(path: str | Path) -> Multigraph:
    return read_labeled_graph(path).graph


def graph_to_dict(graph: Multigraph | LabeledGraph) -> dict[str, Any]:
    if isinstance(graph, LabeledGraph):
        document = graph_to_dict(graph.graph)
        if graph.labels:
            document["labels"] = list(graph.labels)
        return document
    return {"vertices": graph.vertex_count, "edges": [list(edge) for edge in graph.edges]}


def dump_graph(graph: Multigraph | LabeledGraph) -> str:
    """Serialize in the format parse_labeled_graph reads back."""
    return json.dumps(graph_to_dict(graph))
