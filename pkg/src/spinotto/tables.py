"""Delimited output helpers shared by the command-line tool and the figure
presets: 12-significant-digit float formatting, '#'-prefixed metadata lines,
and a reader that round-trips the tool's own files."""

from __future__ import annotations

import math
from typing import Iterable, Sequence, TextIO

__all__ = ["format_value", "write_table", "read_table"]


def format_value(value) -> str:
    """Locale-independent cell text; floats carry 12 significant digits,
    undefined values become empty cells."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    x = float(value)
    if math.isnan(x):
        return ""
    return format(x, ".12g")


def write_table(stream: TextIO, metadata: Sequence[str], header: Sequence[str],
                rows: Iterable[Sequence]) -> None:
    for line in metadata:
        stream.write(f"# {line}\n")
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(format_value(cell) for cell in row) + "\n")


def write_table_file(path, metadata, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        write_table(fh, metadata, header, rows)


def read_table(path) -> tuple[list[str], list[str], list[list[str]]]:
    """Parse a file produced by write_table into (metadata, header, rows)."""
    metadata: list[str] = []
    header: list[str] | None = None
    rows: list[list[str]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                if header is not None:
                    raise ValueError(f"metadata after header in {path}")
                metadata.append(line[1:].strip())
            elif header is None:
                header = line.split(",")
            else:
                cells = line.split(",")
                if len(cells) != len(header):
                    raise ValueError(f"ragged row in {path}: {line!r}")
                rows.append(cells)
    if header is None:
        raise ValueError(f"no header row in {path}")
    return metadata, header, rows
