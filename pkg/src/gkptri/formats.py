"""Text serializations of triangles: csv, json and OEIS b-file style.

Rationals are written as ``p/q`` with q > 0 and integers bare, so every
format round-trips exactly.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .algebra import ParameterError, format_rat, parse_rat, rising
from .core import GkpParams, Triangle, triangle_from_rows

FORMATS = ("csv", "json", "bfile")


def normalize_rows(tri: Triangle, how: str = "none", strip_sign: bool = False) -> Triangle:
    """Divide row n by ``c^{n rising}`` (``rising:<c>``) or ``n!`` (``factorial``)."""
    if how == "none":
        div = lambda n: Fraction(1)  # noqa: E731
    elif how == "factorial":
        div = lambda n: rising(1, n)  # noqa: E731
    elif how.startswith("rising:"):
        c = parse_rat(how.split(":", 1)[1])
        div = lambda n: rising(c, n)  # noqa: E731
    else:
        raise ParameterError(f"unknown normalization {how!r}; use rising:<c>, factorial or none")
    out = []
    for n, row in enumerate(tri.rows):
        d = div(n)
        if d == 0:
            raise ParameterError(f"normalizer vanishes at row {n}")
        out.append(tuple(abs(x / d) if strip_sign else x / d for x in row))
    return Triangle(tuple(out), tri.params if how == "none" and not strip_sign else None)


def dump(tri: Triangle, fmt: str) -> str:
    if fmt == "csv":
        return "".join(",".join(format_rat(x) for x in row) + "\n" for row in tri.rows)
    if fmt == "bfile":
        flat = [x for row in tri.rows for x in row]
        return "".join(f"{i} {format_rat(x)}\n" for i, x in enumerate(flat))
    if fmt == "json":
        doc = {
            "params": None if tri.params is None else [format_rat(v) for v in tri.params.as_tuple()],
            "N": tri.depth,
            "rows": [[format_rat(x) for x in row] for row in tri.rows],
        }
        return json.dumps(doc) + "\n"
    raise ParameterError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def _parse_cell(text: str, where: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise ValueError(f"{where}: {exc}") from None


def load(text: str, fmt: str) -> Triangle:
    if fmt == "csv":
        rows = []
        for ln, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            rows.append([_parse_cell(c, f"line {ln} column {j + 1}") for j, c in enumerate(line.split(","))])
        return triangle_from_rows(rows)
    if fmt == "bfile":
        flat = []
        for ln, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2 or not parts[0].isdigit() or int(parts[0]) != len(flat):
                raise ValueError(f"line {ln}: expected '{len(flat)} <value>'")
            flat.append(_parse_cell(parts[1], f"line {ln}"))
        return triangle_from_rows(_unflatten(flat))
    if fmt == "json":
        doc = json.loads(text)
        rows = [[_parse_cell(c, f"row {n} entry {k}") for k, c in enumerate(r)] for n, r in enumerate(doc["rows"])]
        params = doc.get("params")
        return triangle_from_rows(rows, None if params is None else GkpParams.of(*(parse_rat(v) for v in params)))
    raise ParameterError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def _unflatten(flat: Sequence[Fraction]) -> list[list[Fraction]]:
    rows, i, n = [], 0, 0
    while i < len(flat):
        if i + n + 1 > len(flat):
            raise ValueError(f"{len(flat)} values do not fill a triangle")
        rows.append(list(flat[i : i + n + 1]))
        i += n + 1
        n += 1
    return rows


def format_params(p: GkpParams) -> str:
    return ",".join(format_rat(v) for v in p.as_tuple())
