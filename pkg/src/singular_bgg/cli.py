"""
Command line front end.

    singular-bgg complex --mu 5,5,4,3,2,2,1,0 --k 4 --format ascii

Exit codes: 0 success, 1 invalid input, 2 internal invariant violation or a
failed verification.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from . import render
from .complex import check_suite, oracle_check, oracle_diagram
from .hasse import build_regular_hasse
from .pipeline import PipelineResult, emit_json, profile_dict, run_pipeline
from .weights import InvariantViolation, Weight, WeightError, compute_orbit, reduced_length

SUBCOMMANDS = ("analyze", "relative", "images", "complex", "oracle", "check", "render")
FORMATS = ("ascii", "dot", "json")


@dataclass
class RunConfig:
    subcommand: str
    mu: Weight
    k: int
    format: str = "ascii"
    out: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise WeightError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--mu", required=True, help="comma-separated integers, e.g. 5,5,4,3,2,2,1,0")
    common.add_argument("--k", required=True, type=int)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", default=None, help="write to this file instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")
    parser = _Parser(prog="singular-bgg", description="Singular BGG complexes on G(k,n).")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def parse_config(argv) -> tuple[RunConfig, bool]:
    args = build_parser().parse_args(argv)
    fmt = args.format or ("dot" if args.subcommand == "render" else "ascii")
    return RunConfig(args.subcommand, Weight.parse(args.mu), args.k, fmt, args.out), args.verbose


def _analyze(res: PipelineResult, fmt: str) -> str:
    prof = res.profile
    orbit = compute_orbit(prof.mu, prof.k)
    if fmt == "json":
        out = profile_dict(prof)
        out["orbit"] = [
            {"first": list(e.first), "second": list(e.second), "length": reduced_length(e, prof.I)}
            for e in orbit
        ]
        return json.dumps(out, indent=2)
    if fmt == "dot":
        return render.render_dot(oracle_diagram(prof))
    lines = [
        f"mu = {prof.mu}  n={prof.n} k={prof.k} l={prof.l}",
        f"S = {list(prof.S)}  I = {list(prof.I)}  J = {list(prof.J)}",
        f"|Orb| = {len(orbit)}",
    ]
    lines += [f"  {e}  s={reduced_length(e, prof.I)}" for e in orbit]
    return "\n".join(lines)


def _oracle(res: PipelineResult, fmt: str) -> tuple[str, int]:
    prof = res.profile
    rep = oracle_check(res.complex, prof)
    oracle = build_regular_hasse(prof.J, prof.k - prof.l)
    code = 0 if rep.ok else 2
    if fmt == "json":
        report = {"ok": rep.ok, "bijection": rep.bijection, "degrees": rep.degrees,
                  "arrows": rep.arrows, "counterexamples": rep.counterexamples}
        return emit_json(res, oracle=report), code
    if fmt == "dot":
        return render.render_dot(oracle), code
    head = "oracle isomorphism OK" if rep.ok else "oracle isomorphism FAIL"
    body = render.render_relative(oracle)
    return "\n".join([head, *rep.counterexamples, "", body]), code


def _check(res: PipelineResult, fmt: str) -> tuple[str, int]:
    results = check_suite(res.complex)
    code = 0 if all(r.ok for r in results) else 2
    if fmt == "json":
        return emit_json(res, checks=[{"name": r.name, "ok": r.ok, "detail": r.detail}
                                      for r in results]), code
    return "\n".join(r.line() for r in results), code


def run(cfg: RunConfig) -> tuple[int, str]:
    res = run_pipeline(cfg.mu, cfg.k)
    fmt, cmd = cfg.format, cfg.subcommand
    code = 0
    if cmd == "analyze":
        text = _analyze(res, fmt)
    elif cmd == "oracle":
        text, code = _oracle(res, fmt)
    elif cmd == "check":
        text, code = _check(res, fmt)
    elif fmt == "json":
        text = emit_json(res)
    elif cmd == "relative":
        text = render.render_dot(res.relative) if fmt == "dot" else render.render_relative(res.relative)
    elif cmd == "images":
        text = render.render_dot(res.labeled) if fmt == "dot" else render.render_images(res.labeled)
    elif cmd == "complex":
        text = render.render_dot(res.complex) if fmt == "dot" else render.render_complex(res.complex)
    elif cmd == "render":
        text = render.render_overlay(res.complex) if fmt == "dot" else (
            render.render_relative(res.relative, res.labeled.labels)
            + "\n\n" + render.render_complex(res.complex)
        )
    else:
        raise WeightError(f"unknown subcommand {cmd}")
    return code, text


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg, verbose = parse_config(argv)
        logging.basicConfig(level=logging.INFO if verbose else logging.WARNING)
        code, text = run(cfg)
    except WeightError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
