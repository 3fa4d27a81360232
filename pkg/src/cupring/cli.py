"""Command-line front end.

    cupring resonance FILE [--d D] [--format text|json]
    cupring isotropy FILE [--format text|json]
    cupring screen FILE [--format text|json]
    cupring corpus list | export NAME | report [--format text|json]
    cupring random-3form --seed S [--n N] [--bound B]

FILE is a ring or threeform file (``-`` reads stdin).  Output for identical
inputs and flags is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .corpus import CORPUS, UnknownEntryError, corpus_get
from .fileformat import ParseError, Parsed, parse_input, serialize
from .isotropy import MAXIMALITY_QUALIFIER, Subspace, cup_image_dim, extend_isotropic, is_one_isotropic
from .polynomial import format_rational
from .resonance import CupData, build_delta, resonance_ideal
from .screen import OutOfScopeError, Verdict, kahler_screen, threemanifold_kahler_screen
from .threefold import ThreeForm, cup_from_threeform

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_PARSE = 2


@dataclass
class CommandResult:
    status: int
    out: str
    err: str = ""


class CommandError(Exception):
    def __init__(self, message: str, status: int = EXIT_REJECTED):
        super().__init__(message)
        self.status = status


def _json_scalar(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    return v


def _cup(obj: Parsed) -> CupData:
    return cup_from_threeform(obj) if isinstance(obj, ThreeForm) else obj


def _screen(obj: Parsed) -> Verdict:
    if isinstance(obj, ThreeForm):
        return threemanifold_kahler_screen(obj)
    return kahler_screen(obj)


def base_report(obj: Parsed) -> dict:
    """The fixed-order structured report shared by every subcommand."""
    v = _screen(obj)
    return {
        "b1": v.b1,
        "b2": v.b2,
        "parity": v.parity,
        "r1_full": v.r1_full,
        "witness": None if v.witness is None else str(v.witness),
        "cup_image_dim": v.cup_image_dim,
        "verdict": v.kahler_possible,
        "reasons": [{"tag": f.tag, "excludes": f.excludes, "detail": f.detail} for f in v.reasons],
    }


def _dump(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _verdict_lines(rep: dict) -> List[str]:
    lines = []
    if rep["verdict"] == "excluded":
        tags = [r["tag"] for r in rep["reasons"] if r["excludes"]]
        lines.append(f"verdict: excluded ({', '.join(tags)})")
    else:
        lines.append("verdict: not-excluded (passes the necessary conditions; not a proof of Kählerness)")
    for r in rep["reasons"]:
        mark = "FAIL" if r["excludes"] else "ok  "
        lines.append(f"  [{mark}] {r['tag']}: {r['detail']}")
    return lines


def _summary_lines(rep: dict) -> List[str]:
    return [
        f"b1 = {rep['b1']} ({rep['parity']}), b2 = {rep['b2']}",
        "R1 = H1 (full)" if rep["r1_full"] else f"R1 proper; witness minor: {rep['witness']}",
        f"cup image of H1: dimension {rep['cup_image_dim']}",
    ]


def cmd_resonance(obj: Parsed, d: int, fmt: str) -> str:
    c = _cup(obj)
    rep = base_report(obj)
    try:
        res = resonance_ideal(c, d)
    except ValueError as exc:
        raise CommandError(str(exc)) from None
    delta = build_delta(c)
    size = c.n - d
    rep.update({
        "d": d,
        "delta": delta.tolist(),
        "minor_size": size,
        "generators": [str(g) for g in res.ideal.generators],
        "rd_full": res.full_space,
        "rd_witness": None if res.witness is None else str(res.witness),
    })
    if fmt == "json":
        return _dump(rep)
    lines = [f"Delta ({c.m} x {c.n}):"]
    width = max((len(s) for row in rep["delta"] for s in row), default=1)
    for row in rep["delta"]:
        lines.append("  [ " + "  ".join(s.rjust(width) for s in row) + " ]")
    gens = res.ideal.generators
    lines.append(f"E_{d}: {len(gens)} minors of size {size}, {sum(1 for g in gens if g)} nonzero")
    for (rows, cols), g in zip(res.ideal.labels, gens):
        r = ",".join(str(i + 1) for i in rows)
        k = ",".join(str(j + 1) for j in cols)
        lines.append(f"  rows {{{r}}} x cols {{{k}}}: {g}")
    name = f"R{d}"
    if res.full_space:
        lines.append(f"{name} = H1 (full)")
    else:
        lines.append(f"{name} proper; witness: {res.witness}")
    lines.extend(_verdict_lines(rep))
    return "\n".join(lines) + "\n"


def cmd_isotropy(obj: Parsed, fmt: str) -> str:
    c = _cup(obj)
    rep = base_report(obj)
    whole = Subspace.whole(c.n)
    iso = extend_isotropic(c, Subspace.zero(c.n))
    basis = [[_json_scalar(x) for x in v] for v in iso.vectors()]
    rep.update({
        "one_isotropic": is_one_isotropic(c, whole),
        "isotropic_dim": iso.dim,
        "isotropic_basis": basis,
        "maximality": MAXIMALITY_QUALIFIER,
    })
    if fmt == "json":
        return _dump(rep)
    lines = [
        f"cup image of H1: dimension {cup_image_dim(c, whole)}",
        "H1 is 1-isotropic" if rep["one_isotropic"] else "H1 is not 1-isotropic",
        f"greedy isotropic subspace, dimension {iso.dim} ({MAXIMALITY_QUALIFIER}):",
    ]
    for v in basis:
        lines.append("  (" + ", ".join(str(x) for x in v) + ")")
    return "\n".join(lines) + "\n"


def cmd_screen(obj: Parsed, fmt: str) -> str:
    rep = base_report(obj)
    if fmt == "json":
        return _dump(rep)
    return "\n".join(_summary_lines(rep) + _verdict_lines(rep)) + "\n"


def cmd_corpus(action: str, name: Optional[str], fmt: str) -> str:
    if action == "list":
        width = max(len(k) for k in CORPUS)
        return "".join(f"{k.ljust(width)}  {e.description}\n" for k, e in CORPUS.items())
    if action == "export":
        if not name:
            raise CommandError("corpus export needs an entry name")
        try:
            return corpus_get(name).export()
        except UnknownEntryError as exc:
            raise CommandError(exc.args[0]) from None
    if action == "report":
        reports = []
        for k, e in CORPUS.items():
            rep = {"name": k}
            rep.update(base_report(e.payload))
            reports.append(rep)
        if fmt == "json":
            return _dump({"entries": reports})
        blocks = []
        for rep in reports:
            blocks.append("\n".join([f"== {rep['name']}"] + _summary_lines(rep) + _verdict_lines(rep)))
        return "\n\n".join(blocks) + "\n"
    raise CommandError(f"unknown corpus action {action!r}")


def random_threeform(seed: int, n: int, bound: int) -> ThreeForm:
    rng = random.Random(seed)
    values = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                values[(i, j, k)] = rng.randint(-bound, bound)
    return ThreeForm(n, values)


def cmd_random(seed: int, n: int, bound: int) -> str:
    if n < 0 or bound < 0:
        raise CommandError("--n and --bound must be non-negative")
    t = random_threeform(seed, n, bound)
    return serialize(t, comment=f"random 3-form: seed {seed}, n {n}, entries in [-{bound}, {bound}]")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cupring",
        description="Resonance varieties, isotropy and Kähler screens from cup-product data.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("resonance", help="matrix of linear forms, minors, fullness of R_d")
    sp.add_argument("file")
    sp.add_argument("--d", type=int, default=1, help="resonance depth (default 1)")
    fmt(sp)

    sp = sub.add_parser("isotropy", help="cup image dimension and a greedy maximal isotropic subspace")
    sp.add_argument("file")
    fmt(sp)

    sp = sub.add_parser("screen", help="Kähler screen verdict with reasons")
    sp.add_argument("file")
    fmt(sp)

    sp = sub.add_parser("corpus", help="built-in examples")
    sp.add_argument("action", choices=("list", "export", "report"))
    sp.add_argument("name", nargs="?")
    fmt(sp)

    sp = sub.add_parser("random-3form", help="seeded random 3-form in the input format")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--bound", type=int, default=5)
    return p


def _load(path: str, stdin) -> Parsed:
    if path == "-":
        text = stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CommandError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_input(text)
    except ParseError as exc:
        raise CommandError(f"{path}:\n" + "\n".join(f"  {p}" for p in exc.problems), EXIT_PARSE) from None


def run_command(argv: Sequence[str], stdin=None) -> CommandResult:
    """Run a command and capture its output instead of printing it."""
    args = build_parser().parse_args(list(argv))
    stdin = stdin if stdin is not None else sys.stdin
    try:
        if args.command == "corpus":
            out = cmd_corpus(args.action, args.name, args.format)
        elif args.command == "random-3form":
            out = cmd_random(args.seed, args.n, args.bound)
        else:
            obj = _load(args.file, stdin)
            if args.command == "resonance":
                out = cmd_resonance(obj, args.d, args.format)
            elif args.command == "isotropy":
                out = cmd_isotropy(obj, args.format)
            else:
                out = cmd_screen(obj, args.format)
    except CommandError as exc:
        return CommandResult(exc.status, "", f"error: {exc}\n")
    except OutOfScopeError as exc:
        return CommandResult(EXIT_REJECTED, "", f"error: {exc}\n")
    return CommandResult(EXIT_OK, out)


def main(argv: Optional[Sequence[str]] = None) -> int:
    res = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.out)
    sys.stderr.write(res.err)
    return res.status


if __name__ == "__main__":
    sys.exit(main())
