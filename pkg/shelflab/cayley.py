"""Reading and writing Cayley tables in the ".cay" text format.

A table is a line holding the order n followed by n lines of n integers.
Lines starting with "#" are comments; several tables in one file are
separated by blank lines.
"""
import logging
from pathlib import Path
import typing as t

from shelflab.errors import ShelfLabError
from shelflab.magma import FiniteMagma
from shelflab.magma import MagmaValidationError
from shelflab.magma import make_magma


ENCODING = "UTF-8"

NumberedLine = tuple[int, list[str]]


class CayleyFormatError(ShelfLabError):
    """We raise this for malformed ".cay" text."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def _meaningful_lines(text: str) -> list[NumberedLine]:
    return [
        (number, stripped.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if (stripped := line.strip()) and not stripped.startswith("#")
    ]


def _parse_block(lines: list[NumberedLine], start: int) -> tuple[FiniteMagma, int]:
    """Parse one table starting at lines[start]; return it and the next index."""
    number, words = lines[start]
    if len(words) != 1:
        raise CayleyFormatError("Expected a single integer (the order)", number)
    try:
        order = int(words[0])
    except ValueError:
        raise CayleyFormatError(f"Bad order {words[0]!r}", number) from None
    if order < 1:
        raise CayleyFormatError(f"Order must be positive, not {order}", number)

    rows: list[list[int]] = []
    for x in range(order):
        if start + 1 + x >= len(lines):
            last = lines[-1][0]
            raise CayleyFormatError(f"Expected {order} rows, found {x}", last)
        number, words = lines[start + 1 + x]
        if len(words) != order:
            raise CayleyFormatError(
                f"Row {x} has {len(words)} entries, expected {order}", number,
            )
        try:
            rows.append([int(word) for word in words])
        except ValueError:
            raise CayleyFormatError(f"Non-integer entry in row {x}", number) from None

    try:
        magma = make_magma(order, rows)
    except MagmaValidationError as exc:
        row = exc.row or 0
        raise CayleyFormatError(str(exc), lines[start + 1 + row][0]) from exc
    return magma, start + 1 + order


def parse_cayley(text: str) -> FiniteMagma:
    """Parse exactly one table."""
    lines = _meaningful_lines(text)
    if not lines:
        raise CayleyFormatError("No table found", 1)
    magma, end = _parse_block(lines, 0)
    if end < len(lines):
        raise CayleyFormatError("Trailing garbage after the table", lines[end][0])
    return magma


def parse_cayley_blocks(text: str) -> list[FiniteMagma]:
    """Parse any number of tables, one after the other."""
    lines = _meaningful_lines(text)
    magmas = []
    position = 0
    while position < len(lines):
        magma, position = _parse_block(lines, position)
        magmas.append(magma)
    return magmas


def format_cayley(
    magma: FiniteMagma, comments: t.Iterable[str] = (), *, offset: int = 0,
) -> str:
    """Render a table; `offset` shifts the printed entries (1 for 1-indexed)."""
    width = len(str(magma.order - 1 + offset))
    lines = [f"# {comment}" for comment in comments]
    lines.append(str(magma.order))
    lines.extend(
        " ".join(f"{value + offset:>{width}}" for value in row) for row in magma.table
    )
    return "\n".join(lines) + "\n"


def format_cayley_blocks(magmas: t.Iterable[FiniteMagma]) -> str:
    """Render tables separated by blank lines."""
    return "\n".join(format_cayley(magma) for magma in magmas)


def _read_text(path: Path) -> str:
    logging.debug("Reading %s", path)
    data = path.read_bytes()
    try:
        return data.decode(ENCODING)
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise CayleyFormatError(f"not {ENCODING} text", line) from exc


def read_cayley(path: Path) -> FiniteMagma:
    """Read a single-table ".cay" file."""
    return parse_cayley(_read_text(path))


def read_cayley_blocks(path: Path) -> list[FiniteMagma]:
    return parse_cayley_blocks(_read_text(path))
