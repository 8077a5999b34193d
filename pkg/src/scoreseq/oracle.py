"""Brute-force ground truth for small graphs.

Everything here is exhaustive on purpose: it is the reference the
deciders and the realization code are checked against.

Random inputs come from SplitMix64 so that a seed pins the exact corpus
on any platform::

    state += 0x9E3779B97F4A7C15              (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB (mod 2**64)
    out = z ^ (z >> 31)

A cube coordinate is ``k / d`` with ``k = out % (d + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .feasibility import subset_sums
from .graph import Graph, phi_table
from .tournaments import RandomTournament, ScoreVector, mean_score_sequence

DEFAULT_ORIENTATION_LIMIT = 20
DEFAULT_LATTICE_BUDGET = 2_000_000
DEFAULT_DENOMINATOR = 64

_MASK64 = (1 << 64) - 1


class EnumerationLimitError(ValueError):
    pass


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next() % bound


@dataclass(frozen=True)
class ScoreSequenceSet:
    graph: Graph
    vectors: frozenset[tuple[int, ...]]

    def sorted(self) -> list[tuple[int, ...]]:
        return sorted(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)


def enumerate_score_sequences(
    g: Graph, limit: int = DEFAULT_ORIENTATION_LIMIT
) -> ScoreSequenceSet:
    """Score sequences of all ``2^m`` orientations.

    Orientations are visited in Gray-code order, so each step reverses a
    single edge.
    """
    if g.m > limit:
        raise EnumerationLimitError(
            f"{g.m} edges means 2^{g.m} orientations; limit is {limit} edges"
        )
    scores = [0] * g.n
    for i, _ in g.edges:
        scores[i - 1] += 1  # start with every lower endpoint winning
    lower_wins = [True] * g.m
    seen = {tuple(scores)}
    for step in range(1, 1 << g.m):
        k = (step & -step).bit_length() - 1
        i, j = g.edges[k]
        if lower_wins[k]:
            scores[i - 1] -= 1
            scores[j - 1] += 1
        else:
            scores[i - 1] += 1
            scores[j - 1] -= 1
        lower_wins[k] = not lower_wins[k]
        seen.add(tuple(scores))
    return ScoreSequenceSet(g, frozenset(seen))


def enumerate_lattice_points(
    g: Graph, budget: int = DEFAULT_LATTICE_BUDGET
) -> frozenset[tuple[int, ...]]:
    """Integer points of the zonotope, found by testing every integer
    vector in the degree box against all subset inequalities."""
    degrees = g.degrees()
    if prod(d + 1 for d in degrees) > budget:
        raise EnumerationLimitError(
            f"degree box has {prod(d + 1 for d in degrees)} points, budget is {budget}"
        )
    phi = phi_table(g)
    # largest sum still reachable by the remaining coordinates
    tail = [0] * (g.n + 1)
    for v in range(g.n - 1, -1, -1):
        tail[v] = tail[v + 1] + degrees[v]

    points = set()
    current = [0] * g.n

    def fill(v: int, remaining: int) -> None:
        if v == g.n:
            if remaining == 0:
                sums = subset_sums(current)
                if all(s >= b for s, b in zip(sums, phi)):
                    points.add(tuple(current))
            return
        low = max(0, remaining - tail[v + 1])
        for value in range(low, min(degrees[v], remaining) + 1):
            current[v] = value
            fill(v + 1, remaining - value)
        current[v] = 0

    fill(0, g.m)
    return frozenset(points)


def sample_random_tournament(
    g: Graph, seed: int, denominator: int = DEFAULT_DENOMINATOR
) -> RandomTournament:
    rng = SplitMix64(seed)
    probs = tuple(Fraction(rng.below(denominator + 1), denominator) for _ in g.edges)
    return RandomTournament(g, probs)


def sample_zonotope_point(
    g: Graph, seed: int, denominator: int = DEFAULT_DENOMINATOR
) -> ScoreVector:
    """Image of a random cube point, hence always a mean score sequence."""
    return mean_score_sequence(sample_random_tournament(g, seed, denominator))


def perturb(x: ScoreVector, rng: SplitMix64, amount: Fraction = Fraction(1, 7)) -> ScoreVector:
    """Move ``amount`` of a win between two distinct random coordinates."""
    n = len(x)
    a = rng.below(n)
    b = (a + 1 + rng.below(n - 1)) % n
    y = list(x)
    y[a] += amount
    y[b] -= amount
    return tuple(y)


def random_graph(rng: SplitMix64, max_n: int, max_m: int) -> Graph:
    """A graph with 2..max_n vertices and at most max_m edges."""
    n = 2 + rng.below(max_n - 1)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    m = rng.below(min(max_m, len(pairs)) + 1)
    for k in range(len(pairs) - 1, 0, -1):
        r = rng.below(k + 1)
        pairs[k], pairs[r] = pairs[r], pairs[k]
    return Graph(n, tuple(pairs[:m]))
