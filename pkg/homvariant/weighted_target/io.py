"""
JSON text format for weighted targets.

    {"n": 3, "a": ["1","1","1"], "B": [["-2","1","1"],["1","-2","1"],["1","1","-2"]]}

Rationals are "p/q" or integer strings (plain JSON integers are accepted
too). Symmetry of B and nonzero vertex weights are validated on load.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from homvariant.errors import InputError
from homvariant.multigraph.io import line_of, load_json_document
from homvariant.rational import format_rational

from .graph import WeightedGraph


def weighted_graph_from_dict(document: dict[str, Any], text: str = "") -> WeightedGraph:
    n = document.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(
            f"expected a positive integer, got {n!r}", field="n", line=line_of(text, "n")
        )
    a = document.get("a", ["1"] * n)
    B = document.get("B")
    if not isinstance(a, list):
        raise InputError("expected a list of rationals", field="a", line=line_of(text, "a"))
    if not isinstance(B, list) or not all(isinstance(row, list) for row in B):
        raise InputError("expected a list of rows", field="B", line=line_of(text, "B"))
    try:
        return WeightedGraph(n, tuple(a), tuple(tuple(row) for row in B))
    except InputError as exc:
        key = (exc.field or "").split("[")[0]
        message = str(exc).removeprefix(f"{exc.field}: ") if exc.field else str(exc)
        line = line_of(text, key) if key else None
        raise InputError(message, field=exc.field, line=line) from exc


def parse_weighted_graph(text: str) -> WeightedGraph:
    return weighted_graph_from_dict(load_json_document(text), text)


def read_weighted_graph(path: str | Path) -> WeightedGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc), field=str(path)) from exc
    return parse_weighted_graph(text)


def weighted_graph_to_dict(target: WeightedGraph) -> dict[str, Any]:
    return {
        "n": target.n,
        "a": [format_rational(weight) for weight in target.a],
        "B": [[format_rational(x) for x in row] for row in target.B],
    }


def dump_weighted_graph(target: WeightedGraph) -> str:
    """Serialize in the format parse_weighted_graph reads back."""
    return json.dumps(weighted_graph_to_dict(target))
