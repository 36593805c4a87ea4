"""Command-line entry point: ``codegree-lab <subcommand> ...``.

Exit status: 0 for a definitive answer (including "not found" / "free"),
1 when a search ran out of budget, 2 for usage or input errors, 3 for I/O
failures.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import constructions as cons
from .embedding import DEFAULT_BUDGET, find_embedding
from .errors import BudgetExhausted, InputError, ResourceLimitError
from .extremal import (INDETERMINATE, density_sequence, ex2_exact, ex2_heuristic,
                       freeness_check)
from .h3io import dumps, read_h3, write_h3
from .hypergraph import Hypergraph3, degree_profile, edge_density
from .nice_picture import find_c5_minus

EXIT_OK, EXIT_INDETERMINATE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

CONSTRUCT_KINDS = ("tight-cycle", "tight-cycle-minus", "blow-up", "mubayi-rodl",
                   "tripartite", "complete", "random")


@dataclass
class RunConfig:
    subcommand: str
    options: dict = field(default_factory=dict)
    output_format: str = "text"
    verbosity: int = 0


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _epsilon(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"epsilon must lie in (0, 1), got {value}")
    return value


def _seed(text: str) -> int:
    value = _nonneg_int(text)
    if value >= 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _lengths(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v < 4 for v in values):
        raise argparse.ArgumentTypeError("lengths must be integers >= 4")
    return values


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("text", "records"), default="text",
                        help="human-readable text or line-delimited key=value records")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="codegree-lab",
        description="3-uniform hypergraph tools: constructions, containment, nice-picture search.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    p = sub.add_parser("construct", parents=[common], help="generate a named hypergraph")
    p.add_argument("kind", choices=CONSTRUCT_KINDS)
    p.add_argument("--l", type=_positive_int, help="cycle length or blow-up multiplicity")
    p.add_argument("--n", type=_positive_int, help="vertex count")
    p.add_argument("--depth", type=_nonneg_int, help="iteration depth")
    p.add_argument("--p", type=float, help="edge probability (random)")
    p.add_argument("--min-codegree", type=_nonneg_int, help="codegree floor (random)")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--input", help="base hypergraph (blow-up)")
    p.add_argument("--out", help="output .h3 path (default: stdout)")

    p = sub.add_parser("profile", parents=[common], help="degree/codegree summary")
    p.add_argument("--input", required=True)

    p = sub.add_parser("embed", parents=[common], help="search for a copy of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)

    p = sub.add_parser("find-c5", parents=[common], help="run the nice-picture search for C5-")
    p.add_argument("--input", required=True)
    p.add_argument("--epsilon", type=_epsilon, required=True)
    p.add_argument("--seed", type=_seed, default=None, help="random S_0 from this seed")
    p.add_argument("--extended", action="store_true", help="keep building pictures past t")
    p.add_argument("--apex-rule", choices=("min", "max-degree"), default="min")
    p.add_argument("--report", help="also write the text report to this file")

    p = sub.add_parser("ex2", parents=[common], help="codegree Turán number of a pattern")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--pattern", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--heuristic", action="store_true")
    p.add_argument("--iters", type=_nonneg_int, default=2000)
    p.add_argument("--seed", type=_seed, default=0)

    p = sub.add_parser("density", parents=[common], help="density table of the iterated construction")
    p.add_argument("--max-depth", type=_nonneg_int, required=True)

    p = sub.add_parser("freeness", parents=[common], help="test for C_l minus an edge")
    p.add_argument("--input", required=True)
    p.add_argument("--lengths", type=_lengths, required=True)
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)
    return parser


_INPUT_FIELDS = ("input", "pattern", "host")

_CONSTRUCT_NEEDS = {
    "tight-cycle": ("l",),
    "tight-cycle-minus": ("l",),
    "blow-up": ("input", "l"),
    "mubayi-rodl": ("depth",),
    "tripartite": ("n",),
    "complete": ("n",),
    "random": ("n", "p"),
}


def parse_args(argv: Sequence[str]) -> RunConfig:
    """Parse and validate; exits with status 2 on a usage error."""
    parser = build_parser()
    ns = parser.parse_args(list(argv))
    opts = vars(ns).copy()
    sub = opts.pop("subcommand")
    fmt = opts.pop("output_format")
    verbosity = opts.pop("verbose")
    for name in _INPUT_FIELDS:
        path = opts.get(name)
        if path is not None and not os.path.isfile(path):
            parser.error(f"--{name}: no such file: {path}")
    if sub == "construct":
        missing = [f"--{k}" for k in _CONSTRUCT_NEEDS[opts["kind"]] if opts.get(k) is None]
        if missing:
            parser.error(f"construct {opts['kind']} requires {', '.join(missing)}")
    return RunConfig(subcommand=sub, options=opts, output_format=fmt, verbosity=verbosity)


def _construct(o: dict):
    kind = o["kind"]
    if kind == "tight-cycle":
        return cons.tight_cycle(o["l"]), f"tight cycle C{o['l']}"
    if kind == "tight-cycle-minus":
        return cons.tight_cycle_minus(o["l"]), f"tight cycle minus an edge C{o['l']}-"
    if kind == "blow-up":
        return cons.blow_up(read_h3(o["input"]), o["l"]).result, f"{o['l']}-blow-up of {o['input']}"
    if kind == "mubayi-rodl":
        return cons.mubayi_rodl(o["depth"]).result, f"iterated construction depth {o['depth']}"
    if kind == "tripartite":
        return cons.balanced_tripartite_complete(o["n"]), f"complete tripartite on {o['n']} vertices"
    if kind == "complete":
        return Hypergraph3.complete(o["n"]), f"complete hypergraph on {o['n']} vertices"
    H = cons.random_hypergraph(o["n"], o["p"], seed=o["seed"], min_codegree_target=o.get("min_codegree"))
    return H, f"random n={o['n']} p={o['p']} seed={o['seed']}"


def run(config: RunConfig) -> tuple[int, str]:
    """Execute a parsed command, returning ``(exit status, output text)``."""
    o = config.options
    records = config.output_format == "records"
    out: list[str] = []
    status = EXIT_OK
    sub = config.subcommand

    if sub == "construct":
        H, what = _construct(o)
        if o.get("out"):
            write_h3(H, o["out"], comment=what)
            out.append(f"record=construct kind={o['kind']} n={H.n} m={len(H.edges)} path={o['out']}"
                       if records else f"wrote {what}: n={H.n}, m={len(H.edges)} -> {o['out']}")
        else:
            out.append(dumps(H, comment=what).rstrip("\n"))

    elif sub == "profile":
        H = read_h3(o["input"])
        prof = degree_profile(H)
        dens = edge_density(H) if H.n >= 3 else None
        dens_text = "nan" if dens is None else f"{len(H.edges)}/{H.n * (H.n - 1) * (H.n - 2) // 6}"
        if records:
            out.append(f"record=profile n={H.n} m={len(H.edges)} min_degree={prof.min_degree} "
                       f"min_codegree={prof.min_codegree} density={dens_text} "
                       f"density_decimal={'nan' if dens is None else f'{float(dens):.6f}'}")
        else:
            out.append(f"n = {H.n}, m = {len(H.edges)}")
            out.append(f"min degree = {prof.min_degree}, min codegree = {prof.min_codegree}")
            if dens is not None:
                out.append(f"density = {dens_text} = {float(dens):.6f}")

    elif sub == "embed":
        F, H = read_h3(o["pattern"]), read_h3(o["host"])
        try:
            emb = find_embedding(F, H, o["budget"])
        except BudgetExhausted:
            emb, status = None, EXIT_INDETERMINATE
            out.append("record=embed result=INDETERMINATE" if records else "INDETERMINATE")
        else:
            if emb is None:
                out.append("record=embed result=NONE" if records else "NONE")
            elif records:
                out.append("record=embed result=FOUND")
                out += [f"record=map pattern={p} host={h}" for p, h in enumerate(emb.mapping)]
            else:
                out += emb.lines()

    elif sub == "find-c5":
        H = read_h3(o["input"])
        rep = find_c5_minus(H, o["epsilon"], seed=o["seed"], extended=o["extended"],
                            apex_rule=o["apex_rule"])
        text = rep.text()
        if o.get("report"):
            with open(o["report"], "w", encoding="utf-8") as fh:
                fh.write(text)
        if records:
            out += rep.records()
        else:
            out.append(text.rstrip("\n"))

    elif sub == "ex2":
        F = read_h3(o["pattern"])
        if o["heuristic"]:
            res = ex2_heuristic(o["n"], F, iterations=o["iters"], seed=o["seed"])
        else:
            res = ex2_exact(o["n"], F)
        if records:
            out += res.records()
        else:
            out.append(f"ex2({res.n}) >= {res.value}" if res.method != "exhaustive"
                       else f"ex2({res.n}) = {res.value}")
            out.append(f"method: {res.method}")
            if res.num_classes is not None:
                out.append(f"extremal isomorphism classes: {res.num_classes}")
            if res.seed is not None:
                out.append(f"seed: {res.seed}, iterations: {res.iterations}")
            out.append("witness:")
            out.append(dumps(res.witness).rstrip("\n"))

    elif sub == "density":
        rows = density_sequence(o["max_depth"])
        if records:
            out += [f"record=density depth={r.depth} n={r.n} edges={r.edge_count} ratio={r.ratio} "
                    f"density={r.density.numerator}/{r.density.denominator} "
                    f"density_decimal={r.density_decimal:.6f}" for r in rows]
        else:
            out.append(f"{'depth':>5} {'n':>6} {'edges':>10} {'edges/C(n,3)':>22} {'density':>9}")
            out += [f"{r.depth:5d} {r.n:6d} {r.edge_count:10d} {r.ratio:>22} {r.density_decimal:9.4f}"
                    for r in rows]

    elif sub == "freeness":
        H = read_h3(o["input"])
        rep = freeness_check(H, o["lengths"], o["budget"])
        if any(e.status == INDETERMINATE for e in rep.entries):
            status = EXIT_INDETERMINATE
        if records:
            out += rep.records()
        else:
            out += [f"C{e.length}-: {e.status}" for e in rep.entries]

    else:  # pragma: no cover - argparse restricts the choices
        raise InputError(f"unknown subcommand {sub}")
    return status, "\n".join(out) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    config = parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(config.verbosity, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        status, text = run(config)
    except (InputError, ResourceLimitError) as exc:
        print(f"codegree-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"codegree-lab: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
