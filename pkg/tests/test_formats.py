import json
from fractions import Fraction as F

from scoreseq.feasibility import SubsetViolation, SumMismatch, Feasible
from scoreseq.formats import (
    dumps,
    random_tournament_from_json,
    random_tournament_to_json,
    realization_to_json,
    tournament_from_json,
    tournament_to_json,
)
from scoreseq.graph import complete_graph
from scoreseq.realization import forest_reduce
from scoreseq.tournaments import RandomTournament, Tournament

K3 = complete_graph(3)


def test_random_tournament_json():
    data = {"graph": {"n": 3, "edges": [[2, 3], [1, 2], [1, 3]]}, "probs": ["1/2", "0.25", "1"]}
    rt = random_tournament_from_json(data)
    # each prob travels with its edge when edges are sorted
    assert rt.graph == K3
    assert rt.probs == (F(1, 4), F(1), F(1, 2))
    assert random_tournament_to_json(rt) == {
        "graph": {"n": 3, "edges": [[1, 2], [1, 3], [2, 3]]},
        "probs": ["1/4", "1", "1/2"],
    }


def test_tournament_json_follows_listed_edges():
    t = tournament_from_json({"graph": {"n": 3, "edges": [[3, 2], [1, 2], [1, 3]]}, "winners": [3, 1, 1]})
    assert t.winner_vertices() == [1, 1, 3]


def test_tournament_json_roundtrip():
    t = Tournament.from_winner_vertices(K3, [2, 1, 3])
    data = tournament_to_json(t)
    assert data["winners"] == [2, 1, 3]
    assert tournament_from_json(json.loads(dumps(data))) == t


def test_verdict_json():
    assert Feasible().to_json() == {"feasible": True}
    assert SubsetViolation((1, 2), F(1, 2), 1).to_json() == {
        "feasible": False,
        "witness": {"kind": "subset", "A": [1, 2], "sum": "1/2", "phi": 1},
    }
    assert SumMismatch(F(7, 2), 3).to_json()["witness"] == {"kind": "sum", "sum": "7/2", "expected": 3}


def test_realization_json():
    result = forest_reduce(RandomTournament(K3, ("2/4", "0", "1/2")))
    assert realization_to_json(result) == {
        "probs": ["1/2", "0", "1/2"],
        "fractional_support": [[1, 2], [2, 3]],
        "partition": {"A": [[1, 3]], "B": [], "F": [[1, 2], [2, 3]]},
    }


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a": [1, 2], "b": 1}\n'
