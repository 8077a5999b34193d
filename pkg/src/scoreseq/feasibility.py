"""Membership in the graphic zonotope, with a certificate either way.

A vector ``x`` is a mean score sequence on ``g`` exactly when it sums to
``m`` and every vertex set ``A`` collects at least ``phi(A)`` expected
wins. Three deciders are offered:

* :func:`check_subset` scans all ``2^n`` subsets (the reference answer),
* :func:`check_flow` solves a transportation max-flow and reads a
  violated subset off a minimum cut,
* :func:`check_complete_majorization` handles ``K_n`` by sorting.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .graph import Graph, induced_edge_count, phi_table
from .maxflow import FlowNetwork
from .tournaments import ScoreVector, format_rational, parse_rational

DEFAULT_SUBSET_LIMIT = 20


class DimensionError(ValueError):
    pass


class TooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class Feasible:
    feasible = True
    kind = "feasible"

    def to_json(self) -> dict:
        return {"feasible": True}


@dataclass(frozen=True)
class SumMismatch:
    actual: Fraction
    expected: int
    feasible = False
    kind = "sum"

    def to_json(self) -> dict:
        return {
            "feasible": False,
            "witness": {
                "kind": "sum",
                "sum": format_rational(self.actual),
                "expected": self.expected,
            },
        }


@dataclass(frozen=True)
class SubsetViolation:
    subset: tuple[int, ...]  # sorted, 1-based
    subset_sum: Fraction
    phi: int
    feasible = False
    kind = "subset"

    def to_json(self) -> dict:
        return {
            "feasible": False,
            "witness": {
                "kind": "subset",
                "A": list(self.subset),
                "sum": format_rational(self.subset_sum),
                "phi": self.phi,
            },
        }


Verdict = Union[Feasible, SumMismatch, SubsetViolation]


def verify_witness(g: Graph, x: Sequence[Fraction], verdict: Verdict) -> bool:
    """Recompute a negative verdict from scratch; ``Feasible`` is not checked."""
    if isinstance(verdict, SumMismatch):
        return sum(x) == verdict.actual and verdict.actual != g.m == verdict.expected
    if isinstance(verdict, SubsetViolation):
        total = sum((x[v - 1] for v in verdict.subset), Fraction(0))
        phi = induced_edge_count(g, verdict.subset)
        return total == verdict.subset_sum and phi == verdict.phi and total < phi
    return True


def _prepare(g: Graph, x: Sequence) -> ScoreVector:
    x = tuple(parse_rational(v) for v in x)
    if len(x) != g.n:
        raise DimensionError(f"score vector has length {len(x)}, graph has {g.n} vertices")
    return x


def _scaled(x: ScoreVector) -> tuple[int, list[int]]:
    """Common denominator ``L`` and the integers ``L * x_i``."""
    scale = math.lcm(*(q.denominator for q in x)) if x else 1
    return scale, [int(q * scale) for q in x]


def subset_sums(values: Sequence[int]) -> list[int]:
    """Sum of ``values`` over every bitmask subset."""
    sums = [0] * (1 << len(values))
    for mask in range(1, len(sums)):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + values[low.bit_length() - 1]
    return sums


def check_subset(g: Graph, x: Sequence, limit: int = DEFAULT_SUBSET_LIMIT) -> Verdict:
    """Exhaustive hyperplane test over every vertex subset.

    The reported violation is the first one in order of subset size,
    then lexicographic order, so it does not depend on how the scan is
    carried out.
    """
    x = _prepare(g, x)
    if g.n > limit:
        raise TooLargeError(
            f"{g.n} vertices exceeds the exhaustive subset limit {limit}; use check_flow"
        )
    total = sum(x, Fraction(0))
    if total != g.m:
        return SumMismatch(total, g.m)

    scale, ints = _scaled(x)
    phi = phi_table(g)
    sums = subset_sums(ints)
    if all(total >= scale * bound for total, bound in zip(sums, phi)):
        return Feasible()

    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            mask = sum(1 << v for v in combo)
            if sums[mask] < scale * phi[mask]:
                return SubsetViolation(
                    tuple(v + 1 for v in combo), Fraction(sums[mask], scale), phi[mask]
                )
    raise AssertionError("violation detected but not located")


@dataclass
class _FlowSolution:
    verdict: Verdict
    probs: Optional[tuple[Fraction, ...]] = None


def _solve_flow(g: Graph, x: ScoreVector) -> _FlowSolution:
    total = sum(x, Fraction(0))
    if total != g.m:
        return _FlowSolution(SumMismatch(total, g.m))
    for v, q in enumerate(x, start=1):
        if q < 0:
            return _FlowSolution(SubsetViolation((v,), q, 0))

    scale, ints = _scaled(x)
    source, sink = 0, g.m + g.n + 1
    net = FlowNetwork(g.m + g.n + 2)
    to_lower = []
    for k, (i, j) in enumerate(g.edges, start=1):
        net.add_arc(source, k, scale)
        to_lower.append(net.add_arc(k, g.m + i, scale))
        net.add_arc(k, g.m + j, scale)
    for v in range(1, g.n + 1):
        net.add_arc(g.m + v, sink, ints[v - 1])

    if net.max_flow(source, sink) == g.m * scale:
        probs = tuple(Fraction(net.flow[arc], scale) for arc in to_lower)
        return _FlowSolution(Feasible(), probs)

    reach = net.residual_reachable(source)
    subset = tuple(v for v in range(1, g.n + 1) if g.m + v in reach)
    witness = SubsetViolation(
        subset,
        sum((x[v - 1] for v in subset), Fraction(0)),
        induced_edge_count(g, subset),
    )
    if witness.subset_sum < witness.phi:
        return _FlowSolution(witness)
    # min-cut argument guarantees the branch above; keep a safety net
    if g.n <= DEFAULT_SUBSET_LIMIT:
        return _FlowSolution(check_subset(g, x))
    raise AssertionError(f"min-cut subset {subset} is not a violation")


def check_flow(g: Graph, x: Sequence) -> Verdict:
    """Transportation test: every edge ships one unit of wins to its
    endpoints, vertex ``i`` absorbs at most ``x_i``.

    Feasible exactly when the max flow saturates all ``m`` edge units.
    Otherwise the teams reachable from the source in the residual
    network form a set ``A`` with ``sum(x[A]) < phi(A)``.
    """
    return _solve_flow(g, _prepare(g, x)).verdict


def majorization_verdict(x: Sequence) -> Verdict:
    """Decide membership for ``K_n`` by sorting; the witness is the set of
    the ``k`` weakest teams for the first failing ``k``."""
    x = tuple(parse_rational(v) for v in x)
    n = len(x)
    total = sum(x, Fraction(0))
    if total != n * (n - 1) // 2:
        return SumMismatch(total, n * (n - 1) // 2)
    order = sorted(range(n), key=lambda v: (x[v], v))
    running = Fraction(0)
    for k, v in enumerate(order, start=1):
        running += x[v]
        if running < k * (k - 1) // 2:
            return SubsetViolation(tuple(sorted(u + 1 for u in order[:k])), running, k * (k - 1) // 2)
    return Feasible()


def check_complete_majorization(x: Sequence) -> bool:
    return majorization_verdict(x).feasible


def check(g: Graph, x: Sequence, method: str = "auto", limit: int = DEFAULT_SUBSET_LIMIT) -> Verdict:
    """Dispatch on ``method``: ``subset``, ``flow`` or ``auto`` (sorting for
    complete graphs, flow otherwise)."""
    if method == "subset":
        return check_subset(g, x, limit=limit)
    if method == "flow":
        return check_flow(g, x)
    if method == "auto":
        if g.is_complete():
            x = _prepare(g, x)
            return majorization_verdict(x)
        return check_flow(g, x)
    raise ValueError(f"unknown method {method!r}")

