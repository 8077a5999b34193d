import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from scoreseq.feasibility import check_subset
from scoreseq.graph import Graph, complete_graph, enumerate_forests, path_graph
from scoreseq.oracle import (
    EnumerationLimitError,
    SplitMix64,
    enumerate_lattice_points,
    enumerate_score_sequences,
    perturb,
    random_graph,
    sample_random_tournament,
    sample_zonotope_point,
)
from scoreseq.realization import realize
from scoreseq.tournaments import mean_score_sequence

from conftest import graphs

EDGE = Graph(2, ((1, 2),))


def product_orientations(g):
    """Independent path: plain product over winner choices."""
    out = set()
    for choice in itertools.product((0, 1), repeat=g.m):
        s = [0] * g.n
        for (i, j), c in zip(g.edges, choice):
            s[(j if c else i) - 1] += 1
        out.add(tuple(s))
    return out


def test_splitmix_reference_value():
    # first output for seed 0 in the published reference implementation
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF


def test_score_sequence_examples():
    k3 = enumerate_score_sequences(complete_graph(3))
    assert k3.vectors == set(itertools.permutations((0, 1, 2))) | {(1, 1, 1)}
    assert len(k3) == 7
    assert enumerate_score_sequences(EDGE).vectors == {(1, 0), (0, 1)}
    assert enumerate_score_sequences(path_graph(3)).sorted() == [(0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0)]


@given(graphs(max_n=6))
def test_gray_code_matches_product(g):
    if g.m > 10:
        return
    assert enumerate_score_sequences(g).vectors == product_orientations(g)


def test_score_sequences_are_feasible():
    result = enumerate_score_sequences(complete_graph(4))
    for s in result.vectors:
        assert sum(s) == 6
        assert check_subset(result.graph, s).feasible


def test_lattice_point_examples():
    assert len(enumerate_lattice_points(complete_graph(3))) == 7
    assert enumerate_lattice_points(EDGE) == {(1, 0), (0, 1)}
    k4 = complete_graph(4)
    assert enumerate_lattice_points(k4) == enumerate_score_sequences(k4).vectors


@settings(max_examples=60)
@given(graphs(max_n=6))
def test_corollary_and_forest_count(g):
    if g.m > 10:
        return
    lattice = enumerate_lattice_points(g)
    assert enumerate_score_sequences(g).vectors == lattice
    assert len(lattice) == len(enumerate_forests(g))


def test_limits():
    with pytest.raises(EnumerationLimitError):
        enumerate_score_sequences(complete_graph(7))
    with pytest.raises(EnumerationLimitError):
        enumerate_lattice_points(complete_graph(6), budget=1000)


def test_sampling_examples():
    g = complete_graph(5)
    assert sample_zonotope_point(g, 7) == sample_zonotope_point(g, 7)
    assert sample_zonotope_point(g, 7) != sample_zonotope_point(g, 8)
    assert sample_random_tournament(EDGE, 85).probs == (F(1, 2),)
    assert sample_zonotope_point(EDGE, 85) == (F(1, 2), F(1, 2))
    rt = sample_random_tournament(g, 3, denominator=5)
    assert all((p * 5).denominator == 1 for p in rt.probs)


@settings(max_examples=100)
@given(graphs(max_n=7), st.integers(0, 2**64 - 1))
def test_samples_feasible_and_realizable(g, seed):
    x = sample_zonotope_point(g, seed)
    assert check_subset(g, x).feasible
    assert mean_score_sequence(realize(g, x).tournament) == x


def test_perturb_preserves_sum():
    rng = SplitMix64(1)
    x = (F(1), F(1), F(1))
    for _ in range(20):
        y = perturb(x, rng)
        assert sum(y) == 3
        assert sorted(abs(a - b) for a, b in zip(x, y)) == [0, F(1, 7), F(1, 7)]


def test_random_graph_family():
    rng = SplitMix64(5)
    for _ in range(50):
        g = random_graph(rng, 7, 12)
        assert 2 <= g.n <= 7 and g.m <= 12
