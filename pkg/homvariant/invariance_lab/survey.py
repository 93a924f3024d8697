"""
Exhaustive survey over small simple targets.

Every simple graph G on 1..max_vertices vertices (one per isomorphism class)
is checked against both lemmas, the theorem and the twin lemma. Rows are
independent; with jobs > 1 they run in a pool of spawned processes and come
back in enumeration order. Each worker configures logging with the parent's
level and format, and every row carries the caller's run context.

OUTPUT:
    render_table        fixed-width text, one line per row
    render_json_lines   one JSON object per row, sorted keys
"""

from __future__ import annotations

import json
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import networkx as nx

from homvariant.errors import InputError
from homvariant.logger import (
    active_logging_options,
    configure_logging,
    get_extra_context,
    get_run_id,
    logger,
    trace_computation,
    with_run_context,
)
from homvariant.multigraph import Multigraph, enumerate_simple_graphs
from homvariant.weighted_target import from_multigraph

from .lemmas import CONSISTENT, check_lemma1, check_lemma2
from .theorem import check_theorem1, check_twin_lemma

SURVEY_VERTEX_LIMIT = 6


# =============================================================================
# NAMING
# =============================================================================


def graph6_id(graph: Multigraph) -> str:
    return nx.to_graph6_bytes(nx.Graph(graph.to_networkx()), header=False).decode().strip()


def _family_name(g: nx.Graph) -> str | None:
    n, m = g.number_of_nodes(), g.number_of_edges()
    degrees = sorted((d for _, d in g.degree()), reverse=True)
    if n == 1:
        return "K1"
    if m == 0:
        return f"E{n}"
    if m == n * (n - 1) // 2:
        return f"K{n}"
    if not nx.is_connected(g):
        return None
    if m == n - 1 and degrees[0] <= 2:
        return f"P{n}"
    if m == n and degrees[0] == 2:
        return f"C{n}"
    if m == n - 1 and degrees[0] == m:
        return f"S{m}"
    return None


def graph_name(graph: Multigraph) -> str:
    """K_n, E_n, P_n, C_n, star S_m, "co-" one of these, else the graph6 id."""
    g = nx.Graph(graph.to_networkx())
    name = _family_name(g)
    if name is not None:
        return name
    complement = _family_name(nx.complement(g))
    if complement is not None and not complement.startswith(("K", "E")):
        return f"co-{complement}"
    return graph6_id(graph)


# =============================================================================
# ROWS
# =============================================================================


@dataclass
class SurveyRow:
    graph_id: str
    name: str
    n: int
    m: int
    transitive: bool
    generously_transitive: bool
    lemma1: str
    lemma2: str
    theorem1: str
    twin_lemma: bool
    witness: dict | None = None
    lemma2_witness: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        verdicts = (self.lemma1, self.lemma2, self.theorem1)
        return all(v == CONSISTENT for v in verdicts) and self.twin_lemma

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "name": self.name,
            "n": self.n,
            "m": self.m,
            "transitive": self.transitive,
            "generously_transitive": self.generously_transitive,
            "lemma1": self.lemma1,
            "lemma2": self.lemma2,
            "theorem1": self.theorem1,
            "twin_lemma": self.twin_lemma,
            "consistent": self.consistent,
            "witness": self.witness,
            "lemma2_witness": self.lemma2_witness,
        }


def survey_row(
    graph: Multigraph,
    seed: int | None = None,
    run_id: str | None = None,
    extra: dict[str, Any] | None = None,
) -> SurveyRow:
    """Run every check on the simple target G."""
    graph_id = graph6_id(graph)
    with with_run_context(run_id, **{**(extra or {}), "graph_id": graph_id}):
        target = from_multigraph(graph)
        twin = check_twin_lemma(target)
        lemma1 = check_lemma1(target, reduce_twins=True)
        lemma2 = check_lemma2(target, reduce_twins=True)
        theorem = check_theorem1(target, seed=seed)

        row = SurveyRow(
            graph_id=graph_id,
            name=graph_name(graph),
            n=graph.vertex_count,
            m=graph.edge_count,
            transitive=twin.transitive,
            generously_transitive=twin.generously_transitive,
            lemma1=lemma1.status,
            lemma2=lemma2.status,
            theorem1=theorem.status,
            twin_lemma=twin.agrees,
            witness=theorem.witness.to_dict() if theorem.witness else None,
            lemma2_witness=lemma2.witness.to_dict() if lemma2.witness else None,
        )
        log = logger.info if row.consistent else logger.warning
        log(
            "survey_row_completed",
            name=row.name,
            generously_transitive=row.generously_transitive,
            theorem1=row.theorem1,
        )
        return row


_RowTask = tuple[Multigraph, int | None, str | None, dict[str, Any]]


def _row_task(task: _RowTask) -> SurveyRow:
    return survey_row(*task)


def _init_worker(options: dict[str, str]) -> None:
    configure_logging(
        level=options.get("level"), log_format=options.get("log_format"), queued=False
    )


@trace_computation("invariance_lab.exhaustive_survey", instrumentation_type="lab")
def exhaustive_survey(
    max_vertices: int, *, jobs: int = 1, seed: int | None = None
) -> list[SurveyRow]:
    """
    One row per simple graph up to `max_vertices` vertices (at most 6).

    Raises:
        InputError: max_vertices outside 1..6 or jobs < 1.
    """
    if not 1 <= max_vertices <= SURVEY_VERTEX_LIMIT:
        raise InputError(
            f"expected 1 <= max_vertices <= {SURVEY_VERTEX_LIMIT}, got {max_vertices}",
            field="max_vertices",
        )
    if jobs < 1:
        raise InputError(f"expected jobs >= 1, got {jobs}", field="jobs")

    run_id, extra = get_run_id(), get_extra_context()
    tasks: list[_RowTask] = [
        (graph, seed, run_id, extra) for graph in enumerate_simple_graphs(max_vertices)
    ]
    if jobs == 1:
        rows = [_row_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(
            max_workers=jobs,
            mp_context=multiprocessing.get_context("spawn"),
            initializer=_init_worker,
            initargs=(active_logging_options(),),
        ) as pool:
            rows = list(pool.map(_row_task, tasks))

    logger.info(
        "survey_completed",
        rows=len(rows),
        inconsistent=sum(not row.consistent for row in rows),
    )
    return rows


# =============================================================================
# RENDERING
# =============================================================================

_COLUMNS = (
    ("graph_id", 9),
    ("name", 8),
    ("n", 3),
    ("m", 3),
    ("transitive", 11),
    ("generously_transitive", 22),
    ("lemma1", 13),
    ("lemma2", 13),
    ("theorem1", 13),
    ("twin_lemma", 10),
)


def _cell(value: object) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def render_table(rows: list[SurveyRow]) -> str:
    header = " ".join(name.ljust(width) for name, width in _COLUMNS).rstrip()
    lines = [header, "-" * len(header)]
    for row in rows:
        values = row.to_dict()
        lines.append(
            " ".join(_cell(values[name]).ljust(width) for name, width in _COLUMNS).rstrip()
        )
    return "\n".join(lines)


def render_json_lines(rows: list[SurveyRow]) -> str:
    return "\n".join(json.dumps(row.to_dict(), sort_keys=True) for row in rows)
