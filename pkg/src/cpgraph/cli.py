"""Command-line front end.

Exit codes: 0 everything passed, 1 a check failed, 2 usage or model error,
3 the coloring greedy got stuck.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from .build import LabeledGraph, build_blowup, build_reduced
from .coloring import (
    Coloring,
    chain_coloring,
    chromatic_certificate,
    is_chain_coloring,
    lift_coloring_to_blowup,
    level_color,
    verify_coloring,
)
from .errors import CPGraphError, ColoringFailure, SearchBudgetExceeded
from .export import dumps_graph, to_dot
from .isomorphism import (
    are_equivalent,
    extend_isomorphism,
    find_isomorphism,
    permute_points,
    point_permutation_iso,
    restrict_isomorphism,
)
from .model import FiniteIsolated, GraphKind
from .predict import compare, format_table
from .suite import run_suite, summary

log = logging.getLogger("cpgraph")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ALGO = 0, 1, 2, 3

DEFAULTS = {"m": 2, "seed": 0, "jobs": 1, "trials": 20, "budget": 100_000}


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"5"`` -> [5]; ``"3..7"`` -> [3, 4, 5, 6, 7]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N or LO..HI") from None


def parse_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad list {text!r}; use e.g. 2,3") from None


def _settings(args) -> dict:
    """Hard defaults < config file < explicit flags."""
    merged = dict(DEFAULTS)
    if args.config:
        try:
            merged.update(json.loads(Path(args.config).read_text()))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    return merged


def _single_n(args) -> int:
    if len(args.n) != 1:
        raise UsageError("this command takes a single --n")
    return args.n[0]


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# -- subcommands -------------------------------------------------------------


def cmd_report(args, cfg) -> int:
    n = _single_n(args)
    kinds = [GraphKind(k) for k in (args.kind or ["ag"])]
    report = compare(FiniteIsolated(n), kinds, cfg["m"])
    print(format_table(report))
    if args.json:
        Path(args.json).write_text(json.dumps(report.to_json(), indent=2) + "\n")
    return EXIT_OK if report.all_agree else EXIT_FAIL


def cmd_color(args, cfg) -> int:
    n = _single_n(args)
    method = chain_coloring if args.method == "chain" else level_color
    coloring = method(n)
    print(f"n={n} method={args.method} vertices={len(coloring.assignment)} palette={coloring.palette}")
    status = EXIT_OK
    if args.verify:
        check = verify_coloring(build_reduced(n, GraphKind.AG), coloring)
        cert = chromatic_certificate(n)
        chains = is_chain_coloring(coloring)
        print(f"proper={check.proper} chains={chains} certificate=({cert.lower},{cert.upper})")
        if not check.proper:
            print(f"conflict: {check.conflict[0]} -- {check.conflict[1]}")
        if not (check.proper and cert.conclusive and coloring.palette == cert.upper):
            status = EXIT_FAIL
    if args.out:
        Path(args.out).write_text(json.dumps(coloring.to_json()) + "\n")
    return status


def cmd_verify(args, cfg) -> int:
    kinds = args.kind or [k.value for k in GraphKind]
    ms = args.m_list or [cfg["m"]]
    results = run_suite(args.n, kinds, ms, jobs=cfg["jobs"])
    for r in results:
        if args.verbose or not r.passed:
            print(r.line())
    print(summary(results))
    if args.json:
        Path(args.json).write_text(json.dumps([r.to_json() for r in results], indent=2) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_export(args, cfg) -> int:
    n = _single_n(args)
    kind = GraphKind(args.kind or "ag")
    G = build_blowup(n, kind, args.m) if args.m else build_reduced(n, kind)
    if args.format == "json":
        _write(args.out, dumps_graph(G))
        return EXIT_OK
    coloring = None
    if args.coloring:
        try:
            coloring = Coloring.from_json(json.loads(Path(args.coloring).read_text()))
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"cannot read coloring {args.coloring}: {exc}") from None
        if args.m:
            coloring = lift_coloring_to_blowup(coloring, args.m)
    _write(args.out, to_dot(G, coloring))
    return EXIT_OK


def cmd_iso(args, cfg) -> int:
    n = _single_n(args)
    rng = random.Random(cfg["seed"])
    budget = cfg["budget"]
    if args.mode == "pair":
        n2 = args.n2 if args.n2 is not None else n
        expected = are_equivalent(n, n2)
        psi = find_isomorphism(build_reduced(n, "ag"), build_reduced(n2, "ag"), budget)
        print(f"reduced AG n={n} vs n={n2}: {'isomorphic' if psi else 'not isomorphic'}"
              f" (expected {'isomorphic' if expected else 'not isomorphic'})")
        if psi and args.out:
            Path(args.out).write_text(json.dumps(psi.to_json()) + "\n")
        return EXIT_OK if (psi is not None) == expected else EXIT_FAIL

    if args.mode == "permute":
        G = build_reduced(n, "ag")
        failures = 0
        for t in range(cfg["trials"]):
            perm = list(range(n))
            rng.shuffle(perm)
            labels = [permute_points(A, perm) for A in G.labels]
            rng.shuffle(labels)
            H = LabeledGraph(labels, [(permute_points(a, perm), permute_points(b, perm))
                                      for a, b in G.edges()])
            ok = find_isomorphism(G, H, budget) is not None
            failures += not ok
            log.info("trial %d perm=%s found=%s", t, perm, ok)
        print(f"point-permuted rebuilds of reduced AG n={n}: "
              f"{cfg['trials'] - failures}/{cfg['trials']} isomorphisms found")
        return EXIT_OK if failures == 0 else EXIT_FAIL

    # roundtrip: extend a point permutation to blow-ups, restrict it back
    m = cfg["m"]
    G = build_reduced(n, "ag")
    failures = 0
    for _ in range(cfg["trials"]):
        perm = list(range(n))
        rng.shuffle(perm)
        phi = point_permutation_iso(G, perm)
        psi = extend_isomorphism(phi, m, m, seed=rng.randrange(2**32))
        back = restrict_isomorphism(psi)
        failures += back.forward != phi.forward
    print(f"extend/restrict roundtrip n={n} m={m}: {cfg['trials'] - failures}/{cfg['trials']} identical")
    return EXIT_OK if failures == 0 else EXIT_FAIL


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=parse_range, required=True, help="point count N or range LO..HI")
    common.add_argument("--config", help="JSON file with defaults (m, seed, jobs, trials, budget)")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="cpgraph",
        description="Annihilator, zero-divisor and weak zero-divisor graphs on finite point sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in GraphKind]

    p = sub.add_parser("report", parents=[common], help="predicted vs computed parameters")
    p.add_argument("--kind", choices=kinds, action="append")
    p.add_argument("--m", type=int, default=None, help="copies per class in the blow-up")
    p.add_argument("--json", help="also write the report as JSON")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("color", parents=[common], help="color the reduced annihilator graph")
    p.add_argument("--method", choices=["level", "paper", "chain"], default="level",
                   help="level greedy (alias: paper) or symmetric-chain baseline")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out", help="write the coloring as JSON")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--kind", choices=kinds, action="append")
    p.add_argument("--m", dest="m_list", type=parse_list, default=None, help="comma list, e.g. 2,3")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--json", help="write all results as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="write the graph as DOT or JSON")
    p.add_argument("--kind", choices=kinds, default="ag")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--m", type=int, default=None, help="export the blow-up with m copies per class")
    p.add_argument("--coloring", help="coloring JSON used for DOT fill colors")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("iso", parents=[common], help="isomorphism search and extension")
    p.add_argument("--mode", choices=["pair", "permute", "roundtrip"], default="pair")
    p.add_argument("--n2", type=int, default=None, help="second point count for --mode pair")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", help="write the isomorphism as JSON")
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        cfg = _settings(args)
        return args.func(args, cfg)
    except ColoringFailure as exc:
        print(f"coloring failed: {exc}", file=sys.stderr)
        print(f"  level={exc.level} element={exc.element} "
              f"candidates=[{', '.join(map(str, exc.candidates))}]", file=sys.stderr)
        return EXIT_ALGO
    except SearchBudgetExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, CPGraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
