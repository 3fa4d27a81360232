"""Line-oriented text format for cup-product data and 3-forms.

::

    ring | threeform           # first non-comment token selects the kind
    n <integer>
    m <integer>                # ring only
    mu <i> <j> <k> <p>[/<q>]   # 1-based; ring: i<j, k<=m; threeform: i<j<k<=n

``#`` starts a comment; blank lines are ignored.  Parsing collects every
problem it finds and reports them all with line numbers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Union

from .polynomial import as_rational, format_rational
from .resonance import CupData
from .threefold import ThreeForm

Parsed = Union[CupData, ThreeForm]


class ParseError(ValueError):
    def __init__(self, problems: List[str]):
        self.problems = problems
        super().__init__("\n".join(problems))


def _int(tok: str) -> int:
    if not tok.lstrip("+-").isdigit():
        raise ValueError(f"expected an integer, got {tok!r}")
    return int(tok)


def _rational(tok: str):
    if "/" in tok:
        p, q = tok.split("/", 1)
        num, den = _int(p), _int(q)
        if den == 0:
            raise ValueError(f"zero denominator in {tok!r}")
        return as_rational(Fraction(num, den))
    return _int(tok)


def parse_input(text: str) -> Parsed:
    """Parse ring or threeform text into :class:`CupData` or :class:`ThreeForm`."""
    problems: List[str] = []
    kind: Optional[str] = None
    header: dict = {}
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        where = f"line {lineno}"
        if kind is None:
            if len(toks) != 1 or toks[0] not in ("ring", "threeform"):
                problems.append(f"{where}: expected 'ring' or 'threeform', got {line!r}")
                raise ParseError(problems)
            kind = toks[0]
            continue
        head = toks[0]
        try:
            if head in ("n", "m"):
                if head == "m" and kind != "ring":
                    raise ValueError("'m' is only allowed in ring files (threeform has m = n)")
                if len(toks) != 2:
                    raise ValueError(f"'{head}' takes exactly one integer")
                if head in header:
                    raise ValueError(f"duplicate '{head}' (first given on line {header[head][1]})")
                val = _int(toks[1])
                if val < 0:
                    raise ValueError(f"'{head}' must be non-negative")
                header[head] = (val, lineno)
            elif head == "mu":
                if len(toks) != 5:
                    raise ValueError("'mu' takes i j k and a rational value")
                i, j, k = (_int(t) for t in toks[1:4])
                value = _rational(toks[4])
                if (i, j, k) in entries:
                    raise ValueError(f"duplicate constant ({i},{j},{k}) (first given on line {entries[(i, j, k)][1]})")
                entries[(i, j, k)] = (value, lineno)
            else:
                raise ValueError(f"unknown keyword {head!r}")
        except ValueError as exc:
            problems.append(f"{where}: {exc}")

    if kind is None:
        raise ParseError(["empty input: expected 'ring' or 'threeform'"])
    if "n" not in header:
        problems.append("missing 'n' line")
    if kind == "ring" and "m" not in header:
        problems.append("missing 'm' line")
    if "n" in header and (kind != "ring" or "m" in header):
        n = header["n"][0]
        m = header["m"][0] if kind == "ring" else n
        for (i, j, k), (_, lineno) in entries.items():
            if kind == "ring":
                if not 1 <= i < j <= n:
                    problems.append(f"line {lineno}: need 1 <= i < j <= n = {n}, got i={i}, j={j}")
                if not 1 <= k <= m:
                    problems.append(f"line {lineno}: need 1 <= k <= m = {m}, got k={k}")
            elif not 1 <= i < j < k <= n:
                problems.append(f"line {lineno}: need 1 <= i < j < k <= n = {n}, got ({i},{j},{k})")
    if problems:
        # report in line order
        problems.sort(key=_line_of)
        raise ParseError(problems)
    values = {key: v for key, (v, _) in entries.items()}
    if kind == "ring":
        return CupData(n, m, values)
    return ThreeForm(n, values)


def _line_of(problem: str) -> int:
    head = problem.split(":", 1)[0]
    return int(head[5:]) if head.startswith("line ") else 10 ** 9


def serialize(obj: Parsed, comment: str | None = None) -> str:
    """Canonical text for an object; ``parse_input(serialize(x)) == x``."""
    lines = []
    if comment:
        lines.extend(f"# {c}" if c else "#" for c in comment.splitlines())
    if isinstance(obj, CupData):
        lines += ["ring", f"n {obj.n}", f"m {obj.m}"]
        items = obj.constants.items()
    elif isinstance(obj, ThreeForm):
        lines += ["threeform", f"n {obj.n}"]
        items = obj.values.items()
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    for (i, j, k), v in items:
        lines.append(f"mu {i} {j} {k} {format_rational(v)}")
    return "\n".join(lines) + "\n"
