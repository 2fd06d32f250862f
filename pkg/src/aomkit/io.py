"""Readers and writers for ``.svs`` sign-vector files and ``.arr`` arrangement files.

``.svs``::

    # comment
    elements: a b c
    +-0
    0+-

``.arr``::

    dim: 2
    kind: affine
    a : 1 0 : 0
    b : 0 1 : 3/2

A hyperplane line reads ``label : c1 ... cd : offset`` and its positive side
is ``c . x > offset``. Over an empty ground set the zero vector is written ``()``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core_sign import GroundSet, SignVector
from .geometry import Arrangement, Hyperplane
from .systems import SignSystem

EMPTY_VECTOR = "()"

_NUMBER = re.compile(r"^[+-]?\d+(/\d+)?$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, line


def parse_svs(text: str) -> SignSystem:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'elements:' header") from None
    key, sep, rest = header.partition(":")
    if not sep or key.strip() != "elements":
        raise ParseError("expected 'elements: <labels...>'", lineno, 1)
    try:
        ground = GroundSet(rest.split())
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None
    n = len(ground)
    seen: dict[SignVector, int] = {}
    for lineno, line in lines:
        token = line.strip()
        col = line.index(token[0]) + 1
        if n == 0:
            if token != EMPTY_VECTOR:
                raise ParseError(f"over an empty ground set the only vector is {EMPTY_VECTOR}", lineno, col)
            vec = SignVector.zero(ground)
        else:
            if " " in token or "\t" in token:
                raise ParseError("one sign vector per line", lineno, col + token.index(token.split()[1]))
            for k, ch in enumerate(token):
                if ch not in "+-0":
                    raise ParseError(f"invalid sign character {ch!r}", lineno, col + k)
            if len(token) != n:
                raise ParseError(f"sign vector has length {len(token)}, expected {n}", lineno, col)
            vec = SignVector.from_string(ground, token)
        if vec in seen:
            raise ParseError(f"duplicate vector {token} (first on line {seen[vec]})", lineno, col)
        seen[vec] = lineno
    return SignSystem(ground, seen)


def render_vector(v: SignVector) -> str:
    return str(v) if len(v.ground) else EMPTY_VECTOR


def render_svs(system: SignSystem) -> str:
    out = ["elements: " + " ".join(system.ground.labels) if len(system.ground) else "elements:"]
    out.extend(render_vector(v) for v in system)
    return "\n".join(out) + "\n"


def _number(tok: str, lineno: int, col: int) -> Fraction:
    if not _NUMBER.match(tok):
        raise ParseError(f"expected an integer or p/q, got {tok!r}", lineno, col)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError("zero denominator", lineno, col) from None


def _header(lines, name: str) -> tuple[int, str]:
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(f"missing '{name}:' line") from None
    key, sep, rest = line.partition(":")
    if not sep or key.strip() != name:
        raise ParseError(f"expected '{name}: ...'", lineno, 1)
    return lineno, rest.strip()


def parse_arr(text: str) -> Arrangement:
    lines = _content_lines(text)
    lineno, value = _header(lines, "dim")
    if not value.isdigit() or int(value) < 1:
        raise ParseError(f"dimension must be a positive integer, got {value!r}", lineno)
    dim = int(value)
    lineno, kind = _header(lines, "kind")
    if kind not in ("central", "affine"):
        raise ParseError(f"kind must be 'central' or 'affine', got {kind!r}", lineno)
    hyperplanes = []
    labels: set[str] = set()
    for lineno, line in lines:
        parts = line.split(":")
        if len(parts) != 3:
            raise ParseError("expected '<label> : <c1> ... <cd> : <offset>'", lineno, 1)
        label = parts[0].strip()
        if not label or " " in label:
            raise ParseError(f"invalid label {label!r}", lineno, 1)
        if label in labels:
            raise ParseError(f"duplicate label {label!r}", lineno, 1)
        labels.add(label)
        col = len(parts[0]) + 2
        coeffs = []
        for tok in parts[1].split():
            coeffs.append(_number(tok, lineno, col + parts[1].index(tok)))
        if len(coeffs) != dim:
            raise ParseError(f"expected {dim} coefficients, got {len(coeffs)}", lineno, col)
        if not any(coeffs):
            raise ParseError(f"hyperplane {label!r} has a zero normal", lineno, col)
        off_tok = parts[2].strip()
        offset = _number(off_tok, lineno, len(parts[0]) + len(parts[1]) + 3)
        if kind == "central" and offset != 0:
            raise ParseError("central arrangements need offset 0 on every line", lineno)
        hyperplanes.append(Hyperplane(label, tuple(coeffs), offset))
    return Arrangement(dim, kind, hyperplanes)


def render_arr(arr: Arrangement) -> str:
    out = [f"dim: {arr.dim}", f"kind: {arr.kind}"]
    for h in arr.hyperplanes:
        out.append(f"{h.label} : {' '.join(str(c) for c in h.normal)} : {h.offset}")
    return "\n".join(out) + "\n"
