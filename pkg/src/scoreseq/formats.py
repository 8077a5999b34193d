"""JSON wire formats. Rationals travel as lowest-terms strings."""

from __future__ import annotations

import json
from typing import Any

from .graph import Graph
from .realization import RealizationResult
from .tournaments import (
    RandomTournament,
    Tournament,
    as_score_vector,
    format_rational,
)


def dumps(obj: Any) -> str:
    """Canonical text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "), ensure_ascii=False) + "\n"


def random_tournament_to_json(rt: RandomTournament) -> dict:
    return {"graph": rt.graph.to_json(), "probs": [format_rational(p) for p in rt.probs]}


def _aligned(graph_data: dict, values: list, name: str) -> tuple[Graph, list]:
    """Reorder per-edge ``values`` from the listed edge order to the
    canonical one."""
    g = Graph.from_json(graph_data)
    if not isinstance(values, list) or len(values) != g.m:
        raise ValueError(f'"{name}" must list one entry per edge ({g.m})')
    by_edge = {(min(e), max(e)): v for e, v in zip(graph_data["edges"], values)}
    return g, [by_edge[e] for e in g.edges]


def random_tournament_from_json(data: dict) -> RandomTournament:
    """Probabilities refer to the lower endpoint of each edge."""
    g, probs = _aligned(data["graph"], data["probs"], "probs")
    return RandomTournament(g, as_score_vector(probs))


def tournament_to_json(t: Tournament) -> dict:
    return {"graph": t.graph.to_json(), "winners": t.winner_vertices()}


def tournament_from_json(data: dict) -> Tournament:
    g, winners = _aligned(data["graph"], data["winners"], "winners")
    return Tournament.from_winner_vertices(g, winners)


def realization_to_json(result: RealizationResult) -> dict:
    edges = result.tournament.graph.edges
    return {
        "probs": [format_rational(p) for p in result.tournament.probs],
        "fractional_support": [list(edges[k]) for k in sorted(result.fractional_support)],
        "partition": {
            name: [list(edges[k]) for k in ks] for name, ks in result.partition.items()
        },
    }


def scores_to_json(x) -> list[str]:
    return [format_rational(q) for q in x]
