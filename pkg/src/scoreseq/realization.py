"""Explicit realizations of (mean) score sequences.

:func:`realize` returns a random tournament whose fractional edges form
a forest; for integer input that forest is empty and
:func:`realize_integral` hands back an ordinary tournament.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .feasibility import Verdict, _prepare, _solve_flow
from .graph import Graph, find_cycle_in_edge_subset
from .tournaments import (
    RandomTournament,
    Tournament,
    as_deterministic,
    mean_score_sequence,
)


class InfeasibleError(ValueError):
    """Raised when the requested vector is not a (mean) score sequence."""

    def __init__(self, verdict: Verdict) -> None:
        super().__init__(f"not realizable: {verdict}")
        self.verdict = verdict


class NonIntegralError(ValueError):
    pass


@dataclass(frozen=True)
class RealizationResult:
    tournament: RandomTournament
    fractional_support: frozenset[int]
    cancellations: int = 0

    @property
    def partition(self) -> dict[str, list[int]]:
        """Edge indices split as ``A`` (p = 0, upper endpoint wins),
        ``B`` (p = 1, lower endpoint wins) and ``F`` (fractional)."""
        probs = self.tournament.probs
        return {
            "A": [k for k, p in enumerate(probs) if p == 0],
            "B": [k for k, p in enumerate(probs) if p == 1],
            "F": sorted(self.fractional_support),
        }


def fractional_realization(g: Graph, x: Sequence) -> RandomTournament:
    """Some random tournament with mean score sequence ``x``.

    The probability that the lower endpoint wins edge ``(i, j)`` is the
    flow the edge node sends to ``i`` in a saturating transportation flow.
    """
    solution = _solve_flow(g, _prepare(g, x))
    if not solution.verdict.feasible:
        raise InfeasibleError(solution.verdict)
    return RandomTournament(g, solution.probs)


def _push_direction(cycle, probs) -> tuple[int, Fraction]:
    """Pick +1 or -1 (multiplying the forward/backward edge signs) and the
    step size. The chosen direction is one in which the lowest-indexed
    cycle edge hits a bound; if both or neither do, it moves toward 0."""
    lowest = min(k for k, _ in cycle)
    options = {}
    for direction in (1, -1):
        step = None
        lowest_room = None
        for k, forward in cycle:
            rising = (direction if forward else -direction) > 0
            room = 1 - probs[k] if rising else probs[k]
            step = room if step is None else min(step, room)
            if k == lowest:
                lowest_room = room
                lowest_rises = rising
        options[direction] = (step, lowest_room == step, lowest_rises)

    hits = [d for d in (1, -1) if options[d][1]]
    if len(hits) == 1:
        direction = hits[0]
    else:
        direction = next(d for d in (1, -1) if not options[d][2])
    return direction, options[direction][0]


def forest_reduce(rt: RandomTournament) -> RealizationResult:
    """Cancel cycles in the fractional support until it is a forest.

    Walking a cycle, an edge traversed from its lower endpoint gets
    ``+step`` and one traversed from its upper endpoint gets ``-step``:
    every vertex on the cycle gains ``step`` on its outgoing edge and
    loses it on the incoming one, so the mean score sequence is fixed.
    Each round pins at least one edge to 0 or 1, and pinned edges never
    move again.
    """
    g = rt.graph
    probs = list(rt.probs)
    target = mean_score_sequence(rt)
    rounds = 0
    while True:
        support = [k for k, p in enumerate(probs) if 0 < p < 1]
        cycle = find_cycle_in_edge_subset(g, support)
        if cycle is None:
            break
        direction, step = _push_direction(cycle, probs)
        for k, forward in cycle:
            probs[k] += step if (direction if forward else -direction) > 0 else -step
        rounds += 1
        assert rounds <= g.m, "cycle cancellation did not terminate within m rounds"
        assert mean_score_sequence(RandomTournament(g, tuple(probs))) == target

    reduced = RandomTournament(g, tuple(probs))
    return RealizationResult(reduced, reduced.fractional_support(), rounds)


def realize(g: Graph, x: Sequence) -> RealizationResult:
    return forest_reduce(fractional_realization(g, x))


def realize_integral(g: Graph, s: Sequence) -> Tournament:
    """A deterministic tournament with score sequence ``s``.

    A leaf of a nonempty fractional forest would have an integer score
    made of integers plus one strictly fractional term, so for integer
    ``s`` the forest is empty.
    """
    s = _prepare(g, s)
    for v, q in enumerate(s, start=1):
        if q.denominator != 1:
            raise NonIntegralError(f"score of vertex {v} is not an integer: {q}")
    result = realize(g, s)
    if result.fractional_support:
        raise AssertionError(
            f"integral input left fractional edges {sorted(result.fractional_support)}"
        )
    return as_deterministic(result.tournament)
