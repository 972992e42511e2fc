"""Plain-text b-files: one "index value" line per term, no header."""

from __future__ import annotations

from pathlib import Path

from .errors import DomainError
from .sequences import SequenceFamily


def format_bfile(family: SequenceFamily, count: int, offset: int | None = None) -> str:
    start = family.first_index if offset is None else offset
    values = family.prefix(count, start)
    return "".join(f"{start + i} {v}\n" for i, v in enumerate(values))


def parse_bfile(text: str) -> list[tuple[int, int]]:
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        fields = line.split(" ")
        if len(fields) != 2:
            raise DomainError(f"line {lineno}: expected 'index value', got {line!r}")
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise DomainError(f"line {lineno}: non-integer field in {line!r}") from None
        if records and index != records[-1][0] + 1:
            raise DomainError(f"line {lineno}: index {index} does not follow {records[-1][0]}")
        records.append((index, value))
    return records


def export_bfile(family: SequenceFamily, count: int, path: str | Path, offset: int | None = None) -> None:
    Path(path).write_text(format_bfile(family, count, offset))


def check_bfile(family: SequenceFamily, path: str | Path) -> list[str]:
    """Mismatches between the file and the family; empty when they agree."""
    records = parse_bfile(Path(path).read_text())
    if not records:
        return ["file holds no records"]
    start = records[0][0]
    if start < family.first_index:
        return [f"first index {start} precedes the family offset {family.first_index}"]
    expected = family.prefix(len(records), start)
    return [f"index {i}: file has {v}, expected {e}"
            for (i, v), e in zip(records, expected) if v != e]
