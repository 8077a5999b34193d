"""Command-line front end.

Exit status: 0 feasible / success, 1 infeasible or disagreement,
2 usage or input error. Output is canonical JSON on stdout (or
``--output``).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import feasibility, oracle
from .feasibility import TooLargeError, check, check_flow, check_subset, majorization_verdict
from .formats import dumps, realization_to_json, scores_to_json, tournament_to_json
from .graph import EnumerationTooLargeError, Graph, GraphError, complete_graph, enumerate_forests
from .realization import InfeasibleError, NonIntegralError, realize, realize_integral
from .tournaments import RationalParseError, as_score_vector

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2

# subset scans in compare mode stay below this size
COMPARE_SUBSET_MAX_N = 12


class InputError(Exception):
    pass


def load_graph(spec: str) -> Graph:
    match = re.fullmatch(r"K(\d+)", spec)
    if match:
        n = int(match.group(1))
        if n < 1:
            raise InputError("K<n> needs n >= 1")
        return complete_graph(n)
    try:
        text = sys.stdin.read() if spec == "-" else Path(spec).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read graph file {spec}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in graph {spec}: {exc}") from None
    try:
        return Graph.from_json(data)
    except GraphError as exc:
        raise InputError(f"invalid graph {spec}: {exc}") from None


def load_scores(args: argparse.Namespace) -> tuple[Fraction, ...]:
    if args.scores is not None and args.scores_file is not None:
        raise InputError("give either --scores or --scores-file, not both")
    if args.scores is not None:
        raw = args.scores.split(",")
    elif args.scores_file is not None:
        try:
            data = json.loads(Path(args.scores_file).read_text(encoding="utf-8"))
        except OSError as exc:
            raise InputError(f"cannot read scores file {args.scores_file}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON in scores file {args.scores_file}: {exc}") from None
        raw = data.get("scores") if isinstance(data, dict) else data
        if not isinstance(raw, list):
            raise InputError("scores file must hold a JSON list or {\"scores\": [...]}")
        if any(isinstance(v, float) for v in raw):
            raise InputError("scores must be integers or strings like \"1/2\" or \"0.5\", not JSON floats")
    else:
        raise InputError("this command needs --scores or --scores-file")
    try:
        return as_score_vector(raw)
    except RationalParseError as exc:
        raise InputError(f"invalid score entry: {exc}") from None


def _verdict_status(verdict) -> int:
    return EXIT_OK if verdict.feasible else EXIT_INFEASIBLE


def cmd_check(args, g: Graph):
    x = load_scores(args)
    if len(x) != g.n:
        raise InputError(f"score vector has length {len(x)}, graph has {g.n} vertices")
    verdict = check(g, x, method=args.method, limit=args.limit or feasibility.DEFAULT_SUBSET_LIMIT)
    return verdict.to_json(), _verdict_status(verdict)


def cmd_realize(args, g: Graph):
    x = load_scores(args)
    if len(x) != g.n:
        raise InputError(f"score vector has length {len(x)}, graph has {g.n} vertices")
    try:
        if args.integral:
            return tournament_to_json(realize_integral(g, x)), EXIT_OK
        return realization_to_json(realize(g, x)), EXIT_OK
    except InfeasibleError as exc:
        return exc.verdict.to_json(), EXIT_INFEASIBLE


def cmd_enumerate(args, g: Graph):
    if args.what == "scores":
        kwargs = {"limit": args.limit} if args.limit else {}
        vectors = oracle.enumerate_score_sequences(g, **kwargs).sorted()
        return [list(v) for v in vectors], EXIT_OK
    if args.what == "lattice":
        kwargs = {"budget": args.limit} if args.limit else {}
        return [list(v) for v in sorted(oracle.enumerate_lattice_points(g, **kwargs))], EXIT_OK
    kwargs = {"limit": args.limit} if args.limit else {}
    forests = enumerate_forests(g, **kwargs)
    return [[list(g.edges[k]) for k in sorted(f)] for f in forests], EXIT_OK


def compare_instance(g: Graph, samples: int, seed: int, limit: int | None = None) -> dict:
    """Cross-check every decider and the orientation oracle on one graph."""
    kwargs = {"limit": limit} if limit else {}
    scores = oracle.enumerate_score_sequences(g, **kwargs).vectors
    lattice = oracle.enumerate_lattice_points(g)
    use_subset = g.n <= COMPARE_SUBSET_MAX_N

    rng = oracle.SplitMix64(seed)
    instances = [tuple(Fraction(v) for v in s) for s in sorted(lattice)]
    for _ in range(samples):
        point = oracle.sample_zonotope_point(g, rng.next())
        instances.append(point)
        if g.n >= 2:
            instances.append(oracle.perturb(point, rng))

    disagreements = []
    for x in instances:
        kinds = {"flow": check_flow(g, x).feasible}
        if use_subset:
            kinds["subset"] = check_subset(g, x).feasible
        if g.is_complete():
            kinds["majorization"] = majorization_verdict(x).feasible
        if all(q.denominator == 1 for q in x) and all(q >= 0 for q in x):
            kinds["oracle"] = tuple(int(q) for q in x) in scores
        if len(set(kinds.values())) > 1:
            disagreements.append({"x": scores_to_json(x), "verdicts": kinds})

    return {
        "agree": not disagreements and scores == lattice,
        "checked": len(instances),
        "disagreements": disagreements,
        "lattice_points": len(lattice),
        "methods": sorted(
            ["flow", "oracle"] + (["subset"] if use_subset else []) + (["majorization"] if g.is_complete() else [])
        ),
        "score_sequences": len(scores),
    }


def cmd_compare(args, g: Graph):
    report = compare_instance(g, args.samples, args.seed, args.limit)
    return report, EXIT_OK if report["agree"] else EXIT_INFEASIBLE


def cmd_sample(args, g: Graph):
    x = oracle.sample_zonotope_point(g, args.seed, args.denominator)
    return {"scores": scores_to_json(x), "seed": args.seed}, EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "realize": cmd_realize,
    "enumerate": cmd_enumerate,
    "compare": cmd_compare,
    "sample": cmd_sample,
}


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scoreseq",
        description="Score sequences of (random) tournaments on arbitrary graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("graph", help='graph JSON file, "-" for stdin, or K<n> for the complete graph')
        p.add_argument("--output", help="write JSON here instead of stdout")
        p.add_argument("--limit", type=int, help="override the enumeration / exhaustive-scan limit")

    def scores(p):
        p.add_argument("--scores", help='comma-separated rationals, e.g. "1/2,1,3/2"')
        p.add_argument("--scores-file", help="JSON list of rationals")

    p = sub.add_parser("check", help="decide membership and print a witness")
    common(p)
    scores(p)
    p.add_argument("--method", choices=["subset", "flow", "auto"], default="auto")

    p = sub.add_parser("realize", help="build a (random) tournament with the given scores")
    common(p)
    scores(p)
    p.add_argument("--integral", action="store_true", help="require integer scores and output winners")

    p = sub.add_parser("enumerate", help="list score sequences, lattice points or forests")
    common(p)
    p.add_argument("--what", choices=["scores", "lattice", "forests"], default="scores")

    p = sub.add_parser("compare", help="cross-check all deciders against brute force")
    common(p)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=_seed, default=0)

    p = sub.add_parser("sample", help="a seeded random mean score sequence")
    common(p)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--denominator", type=int, default=oracle.DEFAULT_DENOMINATOR)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        g = load_graph(args.graph)
        payload, status = COMMANDS[args.verb](args, g)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TooLargeError, EnumerationTooLargeError, oracle.EnumerationLimitError) as exc:
        print(f"error: instance too large: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NonIntegralError as exc:
        print(f"error: --integral needs integer scores: {exc}", file=sys.stderr)
        return EXIT_INPUT

    text = dumps(payload)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
