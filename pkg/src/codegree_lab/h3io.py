"""Reader and writer for the ``.h3`` hypergraph text format.

Layout::

    # optional comment lines
    n m
    a b c
    ...

with ``m`` edge lines of 0-based vertex ids in increasing order. The writer
emits edges lexicographically, so ``write(read(s)) == s`` for any file the
writer produced.
"""

from __future__ import annotations

import io
import os
from typing import TextIO, Union

from .errors import InputError
from .hypergraph import Hypergraph3

PathLike = Union[str, "os.PathLike[str]"]


def dumps(H: Hypergraph3, comment: str | None = None) -> str:
    out = io.StringIO()
    _write(H, out, comment)
    return out.getvalue()


def _write(H: Hypergraph3, fh: TextIO, comment: str | None) -> None:
    if comment:
        for line in comment.splitlines():
            fh.write(f"# {line}\n")
    fh.write(f"{H.n} {len(H.edges)}\n")
    for a, b, c in H.edges:
        fh.write(f"{a} {b} {c}\n")


def write_h3(H: Hypergraph3, path: PathLike, comment: str | None = None) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        _write(H, fh, comment)


def loads(text: str) -> Hypergraph3:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {raw!r}") from None
    if not rows:
        raise InputError("empty .h3 input: missing 'n m' header")
    lineno, header = rows[0]
    if len(header) != 2:
        raise InputError(f"line {lineno}: header must be 'n m'")
    n, m = header
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, toks in body:
        if len(toks) != 3:
            raise InputError(f"line {lineno}: an edge needs exactly 3 vertex ids")
        if not toks[0] < toks[1] < toks[2]:
            raise InputError(f"line {lineno}: vertex ids must be strictly increasing")
        edges.append(toks)
    return Hypergraph3(n, edges)


def read_h3(path: PathLike) -> Hypergraph3:
    with open(path, encoding="ascii") as fh:
        return loads(fh.read())
