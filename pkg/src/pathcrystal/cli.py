"""Command line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid configuration,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .crystal import DEFAULT_CAP, CapExceeded, TruncationError
from .demazure import (
    DemazureSetup,
    demazure_paths,
    homogeneous_character,
    inhomogeneous_character,
    verify_inhom,
    verify_iso,
    verify_kostka,
)
from .symfunc import Partition, kostka_foulkes
from .weyl import parse_word

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG, EXIT_CAP = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    l: int = 1
    k: int = 1
    L: str | None = None
    K: str | None = None
    mu: Partition | None = None
    lam: Partition | None = None
    word: tuple[int, ...] = ()
    format: str = "json"
    cap: int = DEFAULT_CAP
    truncate: int | None = None
    target: str | None = None

    def validate(self):
        if self.cap <= 0:
            raise ValueError("--cap must be positive")
        if self.n is not None and self.n < 2:
            raise ValueError("--n must be at least 2")
        if self.l < 1 or self.k < 1:
            raise ValueError("--l and --k must be positive")
        if self.n is not None and self.k >= self.n:
            raise ValueError("--k must be smaller than --n")
        if self.n is not None and any(not 0 <= i < self.n for i in self.word):
            raise ValueError(f"word letters must lie in 0..{self.n - 1}")


def parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _emit(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_graph(cfg: RunConfig) -> tuple[int, str]:
    setup = DemazureSetup(cfg.n, cfg.l, cfg.k)
    sub = demazure_paths(setup, cfg.word, cfg.truncate, cfg.cap)
    g = sub.graph()
    if cfg.format == "dot":
        return EXIT_OK, g.to_dot()
    if cfg.format == "text":
        lines = [str(p) for p in g.nodes]
        lines += [f"{s} --{i}--> {t}" for s, i, t in g.edges]
        return EXIT_OK, "\n".join(lines) + "\n"
    return EXIT_OK, _emit(g.to_json()) + "\n"


def cmd_character(cfg: RunConfig) -> tuple[int, str]:
    if cfg.mu is not None:
        ch, _ = inhomogeneous_character(cfg.n, cfg.mu)
    else:
        if cfg.L is None:
            raise ValueError("character needs --L or --mu")
        ch = homogeneous_character(cfg.n, cfg.l, int(cfg.L), cfg.k)
    if cfg.format == "text":
        return EXIT_OK, str(ch) + "\n"
    return EXIT_OK, _emit(ch.to_json()) + "\n"


def cmd_kostka(cfg: RunConfig) -> tuple[int, str]:
    if cfg.lam is None or cfg.mu is None:
        raise ValueError("kostka needs --lam and --mu")
    poly = kostka_foulkes(cfg.lam, cfg.mu)
    if cfg.format == "text":
        return EXIT_OK, str(poly) + "\n"
    return EXIT_OK, _emit(poly.to_json()) + "\n"


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    reports = []
    if cfg.target == "iso":
        setup = DemazureSetup(cfg.n, cfg.l, cfg.k)
        if cfg.K is not None:
            Ks = parse_range(cfg.K)
        elif cfg.L is not None:
            Ks = list(range(1, max(parse_range(cfg.L)) * setup.d + 1))
        else:
            raise ValueError("verify iso needs --K or --L")
        for K in Ks:
            reports.append({"setup": setup.describe(), **verify_iso(setup, K, cfg.truncate, cfg.cap).to_json()})
    elif cfg.target == "kostka":
        if cfg.L is None:
            raise ValueError("verify kostka needs --L")
        for L in parse_range(cfg.L):
            rep = verify_kostka(cfg.n, cfg.l, L)
            reports.append(rep.to_json())
    elif cfg.target == "inhom":
        if cfg.mu is None:
            raise ValueError("verify inhom needs --mu")
        reports.append(verify_inhom(cfg.n, cfg.mu).to_json())
    else:
        raise ValueError(f"unknown verification target {cfg.target!r}")
    ok = all(r["equal"] for r in reports)
    return (EXIT_OK if ok else EXIT_MISMATCH), _emit({"passed": ok, "reports": reports}) + "\n"


COMMANDS = {"graph": cmd_graph, "character": cmd_character, "kostka": cmd_kostka, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank of affine sl_n")
    common.add_argument("--l", type=int, default=1, help="level (row length)")
    common.add_argument("--k", type=int, default=1, help="column height")
    common.add_argument("--L", help="number of tensor factors (range a..b for verify)")
    common.add_argument("--K", help="steps of w^(K), range a..b allowed")
    common.add_argument("--mu", type=Partition.parse, help="partition, e.g. 3,2,1")
    common.add_argument("--lam", type=Partition.parse, help="partition, e.g. 2,1")
    common.add_argument("--word", default="", help='space separated indices, e.g. "0 1 0"')
    common.add_argument("--format", choices=["dot", "json", "text"], default=None)
    common.add_argument("--cap", type=int, default=None, help="node cap (env CRYSTAL_CAP)")
    common.add_argument("--truncate", type=int, default=None, help="truncation length J")

    parser = argparse.ArgumentParser(prog="pathcrystal", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("graph", parents=[common], help="Demazure crystal graph for a word")
    sub.add_parser("character", parents=[common], help="graded Demazure character")
    sub.add_parser("kostka", parents=[common], help="Kostka-Foulkes polynomial by charge")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("target", choices=["iso", "kostka", "inhom"])
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    cap = args.cap
    if cap is None:
        cap = int(os.environ.get("CRYSTAL_CAP", DEFAULT_CAP))
    fmt = args.format or ("dot" if args.command == "graph" else "json")
    cfg = RunConfig(
        command=args.command,
        n=args.n,
        l=args.l,
        k=args.k,
        L=args.L,
        K=args.K,
        mu=args.mu,
        lam=args.lam,
        word=parse_word(args.word),
        format=fmt,
        cap=cap,
        truncate=args.truncate,
        target=getattr(args, "target", None),
    )
    if cfg.command != "kostka" and cfg.n is None:
        raise ValueError("--n is required")
    cfg.validate()
    return cfg


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str]:
    """Run the CLI and return ``(exit_code, stdout, stderr)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_CONFIG if exc.code else EXIT_OK), "", ""
    try:
        cfg = make_config(args)
        code, out = COMMANDS[cfg.command](cfg)
        return code, out, ""
    except CapExceeded as exc:
        return EXIT_CAP, "", f"error: {exc}\n"
    except (ValueError, NotImplementedError, TruncationError) as exc:
        return EXIT_CONFIG, "", f"error: {exc}\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
