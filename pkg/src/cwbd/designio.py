"""Reading and writing design files (JSON canonical, header-free CSV)."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .design import Design


class DesignFormatError(ValueError):
    """Malformed design file; carries a 1-based line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.column = column


def design_to_json(d: Design) -> str:
    rows = ",\n".join("    [" + ", ".join(map(str, r)) + "]" for r in d.periods)
    return f'{{\n  "t": {d.t},\n  "n": {d.n},\n  "periods": [\n{rows}\n  ]\n}}\n'


def design_to_csv(d: Design) -> str:
    return "".join(",".join(map(str, r)) + "\n" for r in d.periods)


def _locate(text: str, needle_row: int, needle_col: int | None) -> tuple[int, int]:
    """Line/column of row `needle_row` (and cell) inside the "periods" array."""
    start = text.find('"periods"')
    if start < 0:
        return 1, 1
    pos = text.find("[", start) + 1
    depth, row, col = 0, -1, 0
    for i in range(pos, len(text)):
        ch = text[i]
        if ch == "[":
            depth += 1
            if depth == 1:
                row += 1
                col = 0
                if row == needle_row and needle_col is None:
                    return _linecol(text, i)
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 1:
            col += 1
        elif depth == 1 and row == needle_row and col == needle_col and not ch.isspace():
            return _linecol(text, i)
    return _linecol(text, pos)


def _linecol(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    return line, offset - (text.rfind("\n", 0, offset) + 1) + 1


def parse_json(text: str) -> Design:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DesignFormatError(e.msg, e.lineno, e.colno) from None
    if not isinstance(obj, dict) or not {"t", "n", "periods"} <= obj.keys():
        raise DesignFormatError('expected an object with keys "t", "n", "periods"', 1, 1)
    t, n, periods = obj["t"], obj["n"], obj["periods"]
    if not isinstance(t, int) or not isinstance(n, int) or not isinstance(periods, list):
        raise DesignFormatError('"t" and "n" must be integers and "periods" an array', 1, 1)
    if len(periods) != t:
        raise DesignFormatError(f"expected {t} periods, got {len(periods)}", *_locate(text, min(len(periods), t) - 1, None))
    for i, row in enumerate(periods):
        if not isinstance(row, list) or len(row) != n:
            raise DesignFormatError(f"period {i} must list {n} treatments", *_locate(text, i, None))
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < t:
                raise DesignFormatError(f"treatment {x!r} outside 0..{t - 1}", *_locate(text, i, j))
    return Design(t, n, periods)


def parse_csv(text: str) -> Design:
    rows = []
    for lineno, rec in enumerate(csv.reader(io.StringIO(text)), 1):
        if not rec or all(not c.strip() for c in rec):
            continue
        row, colpos = [], 1
        for c in rec:
            try:
                row.append(int(c))
            except ValueError:
                raise DesignFormatError(f"not an integer: {c.strip()!r}", lineno, colpos) from None
            colpos += len(c) + 1
        rows.append((lineno, row))
    if not rows:
        raise DesignFormatError("empty file", 1, 1)
    t = len(rows)
    n = len(rows[0][1])
    for lineno, row in rows:
        if len(row) != n:
            raise DesignFormatError(f"expected {n} columns, got {len(row)}", lineno, 1)
        for j, x in enumerate(row):
            if not 0 <= x < t:
                raise DesignFormatError(f"treatment {x} outside 0..{t - 1}", lineno, j + 1)
    return Design(t, n, [r for _, r in rows])


def read_design(path: str | Path) -> Design:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".csv" or not text.lstrip().startswith("{"):
        return parse_csv(text)
    return parse_json(text)


def write_design(d: Design, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or ("csv" if path.suffix.lower() == ".csv" else "json")
    path.write_text(design_to_csv(d) if fmt == "csv" else design_to_json(d))


def matrix_to_json(A) -> str:
    return "[\n" + ",\n".join("  [" + ", ".join(map(str, r)) + "]" for r in A) + "\n]\n"


def matrix_to_csv(A) -> str:
    return "".join(",".join(map(str, r)) + "\n" for r in A)


def read_matrix(path: str | Path) -> list[list[int]]:
    path = Path(path)
    text = path.read_text()
    if text.lstrip().startswith(("[", "{")):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise DesignFormatError(e.msg, e.lineno, e.colno) from None
        if isinstance(obj, dict):
            obj = obj.get("adjacency")
        if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
            raise DesignFormatError("expected a square 0/1 array", 1, 1)
        rows = obj
    else:
        rows = []
        for lineno, rec in enumerate(csv.reader(io.StringIO(text)), 1):
            if not rec:
                continue
            try:
                rows.append([int(c) for c in rec])
            except ValueError:
                raise DesignFormatError("not an integer", lineno, 1) from None
    n = len(rows)
    for i, r in enumerate(rows):
        if len(r) != n or any(x not in (0, 1) for x in r):
            raise DesignFormatError(f"row {i} is not a 0/1 row of length {n}", i + 1, 1)
    return rows
