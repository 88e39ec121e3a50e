"""Command-line interface: ``qmarkov <p/r>`` and subcommands.

Exit status is 0 on success, 1 on malformed input and 2 when two methods
that must agree do not (which would mean a bug).
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from .cluster import conjecture_check, hat_cohn, known_f_polynomial
from .cohn import cohn_matrix, entry_relations_check, q_markov_via_trace
from .errors import QMarkovError
from .farey import FareyRational, labels_up_to
from .laurent import LaurentPoly
from .mutation import q_markov_number
from .snake import (
    build_snake,
    build_tilde_snake,
    export_dot,
    mu_labels,
    oracle_bound,
    weighted_match_count_bruteforce,
    weighted_match_count_transfer,
)
from .verify import agreement, run_verification

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2
COMMANDS = ("compute", "verify", "tree", "snake", "cohn", "conjecture")
METHODS = ("mutation", "cohn", "snake", "bruteforce", "all")


@dataclass(frozen=True)
class RunConfig:
    command: str
    label: FareyRational | None = None
    method: str = "mutation"
    output: str = "human"
    oracle_bound: int = 10**6
    n: int = 1
    n_range: tuple[int, int] = (-2, 4)

    def __post_init__(self):
        if self.oracle_bound < 1:
            raise QMarkovError("oracle bound must be >= 1")
        if self.n_range[0] > self.n_range[1]:
            raise QMarkovError("empty n-range")


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True))


def _poly_out(p: LaurentPoly) -> dict:
    return {"poly": str(p), "value_at_1": str(p.eval_at_one()), **p.to_json()}


def cmd_compute(cfg: RunConfig) -> int:
    t = cfg.label
    if cfg.method != "all":
        if cfg.method == "mutation":
            p = q_markov_number(t)
        elif cfg.method == "cohn":
            p = q_markov_via_trace(t, cfg.n)
        elif cfg.method == "snake":
            p = weighted_match_count_transfer(t) if t.numerator else q_markov_number(t)
        else:
            p = weighted_match_count_bruteforce(build_snake(t), cfg.oracle_bound)
        if cfg.output == "json":
            _emit_json({"label": str(t), "method": cfg.method, **_poly_out(p)})
        else:
            print(p)
        return EXIT_OK

    results = agreement(t, ns=(0, 1, 2), bound=cfg.oracle_bound)
    present = {k: v for k, v in results.items() if v is not None}
    ok = len(set(present.values())) == 1
    if cfg.output == "json":
        _emit_json({
            "label": str(t),
            "methods": {k: (v.to_json() if v is not None else None) for k, v in results.items()},
            "poly": str(results["mutation"]),
            "verdict": "OK" if ok else "DISAGREE",
        })
    else:
        for k, v in results.items():
            print(f"{k:>11}: {v if v is not None else '(skipped)'}")
        print("verdict: " + ("OK" if ok else "DISAGREE"))
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_verify(cfg: RunConfig, max_denominator: int) -> int:
    lo, hi = cfg.n_range
    report = run_verification(max_denominator, ns=range(lo, hi + 1), bound=cfg.oracle_bound)
    if cfg.output == "json":
        _emit_json(report)
    else:
        print(f"labels with denominator <= {max_denominator}: {report['labels']}")
        for name, r in report["invariants"].items():
            line = f"  {name:<22} pass {r['passed']:>5}  fail {r['failed']:>3}"
            if r["skipped"]:
                line += f"  skipped {r['skipped']}"
            print(line)
        print("OK" if report["ok"] else "FAILURES")
    return EXIT_OK if report["ok"] else EXIT_DISAGREE


def cmd_tree(cfg: RunConfig, max_denominator: int) -> int:
    labels = labels_up_to(max_denominator)
    if cfg.output == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["t", "m", "min_exp", "coeffs"])
        for t in labels:
            p = q_markov_number(t)
            j = p.to_json()
            w.writerow([str(t), p.eval_at_one(), j["min_exp"], " ".join(j["coeffs"])])
    else:
        for t in labels:
            p = q_markov_number(t)
            _emit_json({"t": str(t), "m": str(p.eval_at_one()), **p.to_json()})
    return EXIT_OK


def cmd_snake(cfg: RunConfig, tilde: bool, dot_file: str | None, show_mu: bool) -> int:
    t = cfg.label
    g = build_tilde_snake(t) if tilde else build_snake(t)
    p = weighted_match_count_transfer(t, tilde=tilde)
    if dot_file:
        text = export_dot(g)
        if dot_file == "-":
            sys.stdout.write(text)
        else:
            with open(dot_file, "w") as fh:
                fh.write(text)
    mus = mu_labels(g) if show_mu else None
    if cfg.output == "json":
        out = g.to_json()
        out["polynomial"] = p.to_json()
        if mus is not None:
            out["mu_labels"] = [m.to_json() for m in mus]
        _emit_json(out)
    elif cfg.output == "dot":
        if not dot_file:
            sys.stdout.write(export_dot(g))
    else:
        print(f"snake graph for t = {t}{' (tilde)' if tilde else ''}: {len(g.boxes)} boxes, word {g.word}")
        print(f"weighted matchings: {p}")
        if mus is not None:
            for i, m in enumerate(mus, 1):
                print(f"  mu_{i} = {m}   ({m.eval_at_one()})")
    return EXIT_OK


def cmd_cohn(cfg: RunConfig, check: bool) -> int:
    t = cfg.label
    c = cohn_matrix(t, cfg.n)
    verdict = {}
    if check:
        verdict["entry_relations"] = entry_relations_check(c)
        lo, hi = cfg.n_range
        traces = {q_markov_via_trace(t, n) for n in range(lo, hi + 1)}
        verdict["n_independent"] = len(traces) == 1
    if cfg.output == "json":
        _emit_json({"label": str(t), "n": cfg.n, "matrix": c.to_json(), "checks": verdict})
    else:
        for row in c.rows():
            print("  ".join(f"[{e}]" for e in row))
        for k, v in verdict.items():
            print(f"{k}: {'OK' if v else 'FAIL'}")
    if check and not all(verdict.values()):
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_conjecture(cfg: RunConfig) -> int:
    t = cfg.label
    top = hat_cohn(t).e12
    expected = known_f_polynomial(t)
    status = None if expected is None else conjecture_check(t, expected)
    if cfg.output == "json":
        _emit_json({
            "label": str(t),
            "top_right": top.to_json(),
            "top_right_text": str(top),
            "reference_available": expected is not None,
            "matches_reference": status,
        })
    else:
        print(f"top-right entry: {top}")
        if status is None:
            print("no reference F-polynomial for this label")
        else:
            print("matches reference F-polynomial: " + ("yes" if status else "NO"))
    return EXIT_DISAGREE if status is False else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmarkov", description="q-deformed Markov numbers")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("human", "json")):
        p.add_argument("--json", dest="output", action="store_const", const="json", default="human")
        if "csv" in choices:
            p.add_argument("--csv", dest="output", action="store_const", const="csv")

    p = sub.add_parser("compute", help="compute m_q^t")
    p.add_argument("label")
    p.add_argument("--method", choices=METHODS, default="mutation")
    p.add_argument("--n", type=int, default=1, help="Cohn parameter for --method cohn")
    fmt(p)

    p = sub.add_parser("verify", help="sweep all labels and check every invariant")
    p.add_argument("--max-denominator", type=int, default=8)
    p.add_argument("--n-range", default="-2:4")
    fmt(p)

    p = sub.add_parser("tree", help="emit (t, m_q^t) for all labels as JSON lines")
    p.add_argument("--max-denominator", type=int, required=True)
    fmt(p, ("human", "json", "csv"))

    p = sub.add_parser("snake", help="weighted snake graph for t")
    p.add_argument("label")
    p.add_argument("--dot", metavar="FILE", help="write Graphviz DOT ('-' for stdout)")
    p.add_argument("--tilde", action="store_true", help="drop the weight of the first south edge")
    p.add_argument("--mu-labels", action="store_true")
    fmt(p)

    p = sub.add_parser("cohn", help="q-Cohn matrix C_t(n)")
    p.add_argument("label")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--n-range", default="-2:4")
    p.add_argument("--check-relations", action="store_true")
    fmt(p)

    p = sub.add_parser("conjecture", help="hat-matrix top-right entry vs known F-polynomials")
    p.add_argument("label")
    fmt(p)

    for name in COMMANDS:
        sub.choices[name].add_argument("--oracle-bound", type=int, default=None)
    return parser


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError as exc:
        raise QMarkovError(f"bad n-range {text!r}; expected lo:hi") from exc


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] not in COMMANDS and not argv[0].startswith("-"):
        argv.insert(0, "compute")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        label = FareyRational.parse(args.label) if hasattr(args, "label") else None
        cfg = RunConfig(
            command=args.command,
            label=label,
            method=getattr(args, "method", "mutation"),
            output=args.output,
            oracle_bound=args.oracle_bound if args.oracle_bound is not None else oracle_bound(),
            n=getattr(args, "n", 1),
            n_range=_parse_range(getattr(args, "n_range", "-2:4")),
        )
        if args.command == "compute":
            return cmd_compute(cfg)
        if args.command == "verify":
            return cmd_verify(cfg, args.max_denominator)
        if args.command == "tree":
            return cmd_tree(cfg, args.max_denominator)
        if args.command == "snake":
            return cmd_snake(cfg, args.tilde, args.dot, args.mu_labels)
        if args.command == "cohn":
            return cmd_cohn(cfg, args.check_relations)
        return cmd_conjecture(cfg)
    except QMarkovError as exc:
        print(f"qmarkov: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
