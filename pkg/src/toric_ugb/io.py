"""Text formats: graph files, basis files, and binomial notation.

Graph file::

    # comment
    n m
    u v        (m lines, 1-based vertices)

Basis file: header ``k m`` then ``k`` rows of ``m`` signed integers, row
``r`` encoding ``x^u - x^v`` as ``u - v``.
"""

from __future__ import annotations

import re

from .binomial import Binomial, canonicalize, check_binomial
from .errors import (
    DimensionMismatch,
    DuplicateEdge,
    InvalidBinomial,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)
from .graph import Graph, build_graph
from .graver import BasisSet


def _content_lines(text: str):
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield num, line


def _ints(num: int, line: str, count: int | None = None) -> list[int]:
    toks = line.split()
    if count is not None and len(toks) != count:
        raise ParseError(num, f"expected {count} integers, got {len(toks)}")
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ParseError(num, f"not an integer row: {line!r}") from None


def parse_graph(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "missing header 'n m'")
    hnum, header = lines[0]
    n, m = _ints(hnum, header, 2)
    if n < 1 or m < 0:
        raise ParseError(hnum, "header needs n >= 1 and m >= 0")
    body = lines[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] if body else hnum) + 1
        raise ParseError(at, f"header announces {m} edges, found {len(body)}")
    edges, where = [], []
    for num, line in body:
        u, v = _ints(num, line, 2)
        edges.append((u - 1, v - 1))
        where.append(num)
    try:
        return build_graph(n, edges)
    except (SelfLoop, DuplicateEdge) as exc:
        raise ParseError(where[exc.edge], str(exc)) from exc
    except VertexOutOfRange as exc:
        raise ParseError(where[exc.edge], str(exc)) from exc


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def format_binomial(b: Binomial, style: str = "monomial") -> str:
    if style == "vector":
        return " ".join(str(x) for x in b.to_row())
    if style == "monomial":
        return str(b)
    raise ValueError(f"unknown style {style!r}")


_FACTOR = re.compile(r"^e(\d+)(?:\^(\d+))?$")


def _parse_monomial(text: str, m: int) -> list[int]:
    vec = [0] * m
    text = text.strip()
    if text == "1":
        return vec
    for factor in text.split("*"):
        hit = _FACTOR.match(factor.strip())
        if not hit:
            raise ValueError(f"bad factor {factor.strip()!r}")
        e = int(hit.group(1)) - 1
        if not 0 <= e < m:
            raise ValueError(f"no edge e{e + 1}")
        vec[e] += int(hit.group(2) or 1)
    return vec


def parse_binomial(text: str, m: int) -> Binomial:
    """Read ``"e1*e3 - e2*e4"`` or a signed row ``"1 -1 1 -1"``."""
    text = text.strip()
    if "e" in text:
        parts = text.split(" - ")
        if len(parts) != 2:
            parts = text.split("-")
        if len(parts) != 2:
            raise ParseError(1, "expected 'monomial - monomial'")
        try:
            return Binomial(tuple(_parse_monomial(parts[0], m)),
                            tuple(_parse_monomial(parts[1], m)))
        except ValueError as exc:
            raise ParseError(1, str(exc)) from None
    row = _ints(1, text)
    if len(row) != m:
        raise DimensionMismatch(m, len(row))
    return Binomial.from_row(row)


def parse_basis(text: str, g: Graph) -> BasisSet:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "missing header 'k m'")
    hnum, header = lines[0]
    k, m = _ints(hnum, header, 2)
    if m != g.m:
        raise DimensionMismatch(g.m, m)
    body = lines[1:]
    if len(body) != k:
        raise ParseError(hnum, f"header announces {k} rows, found {len(body)}")
    elems = []
    for r, (num, line) in enumerate(body, start=1):
        row = _ints(num, line, m)
        if any(abs(x) > 2 for x in row):
            bad = max(row, key=abs)
            raise InvalidBinomial(f"exponent {abs(bad)} exceeds 2", row=r)
        b = Binomial.from_row(row)
        try:
            check_binomial(b, g)
        except InvalidBinomial as exc:
            raise InvalidBinomial(exc.invariant, row=r) from None
        elems.append(canonicalize(b))
    return BasisSet.from_binomials(elems, "imported")


def format_basis(basis: BasisSet, m: int) -> str:
    out = [f"{len(basis)} {m}"]
    out += [format_binomial(b, "vector") for b in basis]
    return "\n".join(out) + "\n"
