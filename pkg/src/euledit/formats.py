"""Edge-list and plan text formats.

Edge list::

    # comment
    n m
    u v        (m lines, 0 <= u < v < n)

Plan::

    ADD u v
    DEL u v
"""

from __future__ import annotations

import io
import os
from typing import Iterable, TextIO

from .editors import EditOp, EditPlan, Mode, OpKind
from .errors import FormatError
from .graph import Graph


def _content_lines(lines: Iterable[str]):
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(fields, lineno, what):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"expected integers in {what}, got {' '.join(fields)!r}", lineno) from None


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    lines = text.splitlines() if isinstance(text, str) else text
    it = _content_lines(lines)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise FormatError("missing 'n m' header line") from None
    fields = header.split()
    if len(fields) != 2:
        raise FormatError(f"header must be 'n m', got {header!r}", lineno)
    n, m = _ints(fields, lineno, "header")
    if n < 0 or m < 0:
        raise FormatError("n and m must be non-negative", lineno)
    edges = []
    seen = set()
    for lineno, line in it:
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"edge line must be 'u v', got {line!r}", lineno)
        u, v = _ints(fields, lineno, "edge")
        if not 0 <= u < v < n:
            raise FormatError(f"edge ({u}, {v}) must satisfy 0 <= u < v < {n}", lineno)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges but {len(edges)} were listed")
    return Graph(n, edges)


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    out = io.StringIO()
    for c in comments:
        out.write(f"# {c}\n")
    out.write(f"{g.n} {g.m}\n")
    for u, v in g.edges():
        out.write(f"{u} {v}\n")
    return out.getvalue()


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="ascii") as fh:
        try:
            return parse_edge_list(fh)
        except FormatError as exc:
            raise FormatError(f"{path}: {exc}") from None


def write_edge_list(g: Graph, path: str | os.PathLike, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edge_list(g, comments))


def parse_plan(text: str | Iterable[str], mode: Mode | str | None = None) -> EditPlan:
    """Read ``ADD u v`` / ``DEL u v`` lines.

    Without an explicit ``mode`` the plan is tagged extend when it only adds,
    reduce when it only deletes and edit otherwise.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    ops = []
    for lineno, line in _content_lines(lines):
        fields = line.split()
        if len(fields) != 3 or fields[0].upper() not in ("ADD", "DEL"):
            raise FormatError(f"plan line must be 'ADD u v' or 'DEL u v', got {line!r}", lineno)
        u, v = _ints(fields[1:], lineno, "plan op")
        if u == v or u < 0 or v < 0:
            raise FormatError(f"invalid endpoints ({u}, {v})", lineno)
        kind = OpKind.ADD if fields[0].upper() == "ADD" else OpKind.REMOVE
        ops.append(EditOp(kind, u, v))
    if mode is None:
        kinds = {op.kind for op in ops}
        if kinds == {OpKind.ADD}:
            mode = Mode.EXTEND
        elif kinds == {OpKind.REMOVE}:
            mode = Mode.REDUCE
        else:
            mode = Mode.EDIT
    return EditPlan(Mode(mode), ops=ops)


def format_plan(plan: EditPlan, comments: Iterable[str] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    body = "".join(f"{op}\n" for op in plan.ops)
    return head + body


def read_plan(path: str | os.PathLike) -> EditPlan:
    with open(path, encoding="ascii") as fh:
        try:
            return parse_plan(fh)
        except FormatError as exc:
            raise FormatError(f"{path}: {exc}") from None


def write_plan(plan: EditPlan, dest: str | os.PathLike | TextIO, comments: Iterable[str] = ()) -> None:
    text = format_plan(plan, comments)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="ascii") as fh:
            fh.write(text)
