from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from scoreseq.graph import Graph, complete_graph, path_graph
from scoreseq.tournaments import (
    LOWER,
    UPPER,
    NotDeterministicError,
    RandomTournament,
    RationalParseError,
    Tournament,
    as_deterministic,
    mean_score_sequence,
    parse_rational,
    score_sequence,
)

from conftest import graphs

K3 = complete_graph(3)  # edges 12, 13, 23
P3 = path_graph(3)  # edges 12, 23

unit = st.fractions(min_value=0, max_value=1, max_denominator=50)


@pytest.mark.parametrize(
    "text, value",
    [("1/2", F(1, 2)), ("0.3", F(3, 10)), ("3", F(3)), (" -2/4 ", F(-1, 2)), (7, F(7))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "abc", "1/2/3", 0.5, True, None])
def test_parse_rational_rejects(bad):
    with pytest.raises(RationalParseError):
        parse_rational(bad)


@pytest.mark.parametrize(
    "g, winners, expected",
    [
        (K3, [1, 3, 2], (1, 1, 1)),  # 1>2, 3>1, 2>3
        (K3, [1, 1, 2], (2, 1, 0)),
        (P3, [2, 2], (0, 2, 0)),
    ],
)
def test_score_sequence(g, winners, expected):
    t = Tournament.from_winner_vertices(g, winners)
    assert score_sequence(t) == expected
    assert t.winner_vertices() == winners


def test_tournament_validation():
    with pytest.raises(ValueError):
        Tournament(K3, (LOWER, UPPER))
    with pytest.raises(ValueError):
        Tournament.from_winner_vertices(P3, [3, 2])


def test_mean_score_examples():
    assert mean_score_sequence(RandomTournament(K3, ("1/2",) * 3)) == (1, 1, 1)
    assert mean_score_sequence(RandomTournament(P3, (F(1, 2), F(1, 2)))) == (F(1, 2), 1, F(1, 2))


def test_probabilities_checked_exactly():
    with pytest.raises(ValueError):
        RandomTournament(P3, (F(1, 2), F(1) + F(1, 10**30)))
    with pytest.raises(ValueError):
        RandomTournament(P3, (F(1, 2),))


def test_as_deterministic():
    rt = RandomTournament(K3, (1, 0, 1))
    t = as_deterministic(rt)
    assert t.winners == (LOWER, UPPER, LOWER)
    assert score_sequence(t) == mean_score_sequence(rt)
    with pytest.raises(NotDeterministicError, match=r"\[1, 3\]"):
        as_deterministic(RandomTournament(K3, (1, "1/3", 0)))


@given(graphs(), st.data())
def test_embedding_and_conservation(g, data):
    winners = data.draw(st.lists(st.sampled_from([LOWER, UPPER]), min_size=g.m, max_size=g.m))
    t = Tournament(g, tuple(winners))
    s = score_sequence(t)
    assert mean_score_sequence(t.lift()) == s
    assert sum(s) == g.m
    assert as_deterministic(t.lift()) == t


@given(graphs(), st.data())
def test_conservation_and_degree_bounds(g, data):
    probs = data.draw(st.lists(unit, min_size=g.m, max_size=g.m))
    x = mean_score_sequence(RandomTournament(g, tuple(probs)))
    assert sum(x) == g.m
    for v in range(1, g.n + 1):
        assert 0 <= x[v - 1] <= g.degree(v)


@given(graphs(), st.data(), unit)
def test_projection_is_affine(g, data, lam):
    p = data.draw(st.lists(unit, min_size=g.m, max_size=g.m))
    q = data.draw(st.lists(unit, min_size=g.m, max_size=g.m))
    mix = tuple(lam * a + (1 - lam) * b for a, b in zip(p, q))
    xp = mean_score_sequence(RandomTournament(g, tuple(p)))
    xq = mean_score_sequence(RandomTournament(g, tuple(q)))
    expected = tuple(lam * a + (1 - lam) * b for a, b in zip(xp, xq))
    assert mean_score_sequence(RandomTournament(g, mix)) == expected


def test_isolated_vertex_scores_zero():
    g = Graph(3, ((1, 2),))
    assert mean_score_sequence(RandomTournament(g, ("1/3",))) == (F(1, 3), F(2, 3), 0)
