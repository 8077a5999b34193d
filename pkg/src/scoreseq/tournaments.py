"""Deterministic and random tournaments, and their (mean) score sequences.

A random tournament stores one exact probability per edge ``(i, j)``,
``i < j``: the chance that the lower endpoint ``i`` wins. The upper
endpoint's chance is always ``1 - p`` and is never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .graph import Graph

ScoreVector = tuple[Fraction, ...]
RationalLike = Union[int, Fraction, str]

LOWER = 0
UPPER = 1


class RationalParseError(ValueError):
    pass


class NotDeterministicError(ValueError):
    pass


def parse_rational(value: RationalLike) -> Fraction:
    """Exact conversion: ``"3/10"``, ``"0.3"``, ``3`` all work; floats do not."""
    if isinstance(value, bool):
        raise RationalParseError(f"not a rational: {value!r}")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise RationalParseError(f"not a rational: {value!r}") from None
    raise RationalParseError(f"not a rational: {value!r}")


def as_score_vector(values: Iterable[RationalLike]) -> ScoreVector:
    return tuple(parse_rational(v) for v in values)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class Tournament:
    graph: Graph
    winners: tuple[int, ...]  # LOWER or UPPER per edge

    def __post_init__(self) -> None:
        object.__setattr__(self, "winners", tuple(self.winners))
        if len(self.winners) != self.graph.m:
            raise ValueError(
                f"expected {self.graph.m} winners, got {len(self.winners)}"
            )
        if any(w not in (LOWER, UPPER) for w in self.winners):
            raise ValueError("each winner must be LOWER (0) or UPPER (1)")

    @classmethod
    def from_winner_vertices(cls, graph: Graph, vertices: Sequence[int]) -> "Tournament":
        """Build from the winning vertex of each edge (the JSON form)."""
        if len(vertices) != graph.m:
            raise ValueError(f"expected {graph.m} winners, got {len(vertices)}")
        winners = []
        for (i, j), v in zip(graph.edges, vertices):
            if v == i:
                winners.append(LOWER)
            elif v == j:
                winners.append(UPPER)
            else:
                raise ValueError(f"winner {v!r} is not an endpoint of edge {[i, j]}")
        return cls(graph, tuple(winners))

    def winner_vertices(self) -> list[int]:
        return [e[w] for e, w in zip(self.graph.edges, self.winners)]

    def lift(self) -> "RandomTournament":
        probs = tuple(Fraction(1 if w == LOWER else 0) for w in self.winners)
        return RandomTournament(self.graph, probs)


@dataclass(frozen=True)
class RandomTournament:
    graph: Graph
    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        probs = tuple(parse_rational(p) for p in self.probs)
        if len(probs) != self.graph.m:
            raise ValueError(f"expected {self.graph.m} probabilities, got {len(probs)}")
        for (i, j), p in zip(self.graph.edges, probs):
            if not 0 <= p <= 1:
                raise ValueError(f"probability {p} on edge {[i, j]} outside [0, 1]")
        object.__setattr__(self, "probs", probs)

    def fractional_support(self) -> frozenset[int]:
        return frozenset(k for k, p in enumerate(self.probs) if 0 < p < 1)


def score_sequence(t: Tournament) -> ScoreVector:
    scores = [0] * t.graph.n
    for (i, j), w in zip(t.graph.edges, t.winners):
        scores[(i if w == LOWER else j) - 1] += 1
    return tuple(Fraction(s) for s in scores)


def mean_score_sequence(rt: RandomTournament) -> ScoreVector:
    """Expected wins per team: the projection of the cube point ``probs``."""
    x = [Fraction(0)] * rt.graph.n
    for (i, j), p in zip(rt.graph.edges, rt.probs):
        x[i - 1] += p
        x[j - 1] += 1 - p
    return tuple(x)


def as_deterministic(rt: RandomTournament) -> Tournament:
    winners = []
    for (i, j), p in zip(rt.graph.edges, rt.probs):
        if p == 1:
            winners.append(LOWER)
        elif p == 0:
            winners.append(UPPER)
        else:
            raise NotDeterministicError(f"edge {[i, j]} has fractional probability {p}")
    return Tournament(rt.graph, tuple(winners))
