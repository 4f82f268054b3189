"""Information tables loaded from CSV and the partitions they induce."""

from __future__ import annotations

import csv
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

from .partitions import Partition, Universe, partition_from_labeling


class TableError(ValueError):
    """Raised for malformed information tables."""


@dataclass(frozen=True)
class InformationTable:
    """Objects (rows) described by categorical attributes (columns)."""

    ids: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        if not self.ids:
            raise TableError("information table has no objects")
        if len(set(self.ids)) != len(self.ids):
            raise TableError("object ids must be distinct")
        if len(self.rows) != len(self.ids) or any(len(r) != len(self.attributes) for r in self.rows):
            raise TableError("information table must be rectangular")

    @property
    def universe(self) -> Universe:
        return Universe(self.ids)

    def value(self, obj: str, attr: str) -> str:
        return self.rows[self.ids.index(obj)][self._column(attr)]

    def _column(self, attr: str) -> int:
        try:
            return self.attributes.index(attr)
        except ValueError:
            raise TableError(f"unknown attribute {attr!r}; table has {', '.join(self.attributes)}") from None


def load_table(path: str | Path) -> InformationTable:
    """Read a CSV whose header names the id column followed by attributes."""
    with open(path, newline="", encoding="utf-8") as fh:
        records = list(csv.reader(fh))
    records = [r for r in records if r]  # blank lines
    if not records:
        raise TableError(f"{path}: empty table (no header row)")
    header = [h.strip() for h in records[0]]
    if len(header) < 2:
        raise TableError(f"{path}: header needs an id column and at least one attribute")
    if any(not h for h in header):
        raise TableError(f"{path}: header has an empty column name")
    if len(set(header)) != len(header):
        raise TableError(f"{path}: duplicate column names in header")
    if len(records) == 1:
        raise TableError(f"{path}: empty table (header but no rows)")

    ids: list[str] = []
    rows: list[tuple[str, ...]] = []
    seen: dict[str, int] = {}
    for lineno, record in enumerate(records[1:], start=2):
        if len(record) != len(header):
            raise TableError(f"{path}: row {lineno} has {len(record)} fields, expected {len(header)}")
        cells = [c.strip() for c in record]
        for col, cell in zip(header, cells):
            if cell == "":
                raise TableError(f"{path}: row {lineno}, column {col!r}: missing value")
        obj = cells[0]
        if obj in seen:
            raise TableError(f"{path}: row {lineno}: duplicate id {obj!r} (first seen on row {seen[obj]})")
        seen[obj] = lineno
        ids.append(obj)
        rows.append(tuple(cells[1:]))
    return InformationTable(tuple(ids), tuple(header[1:]), tuple(rows))


def indiscernibility_partition(t: InformationTable, attrs: Iterable[str]) -> Partition:
    """Group objects that agree on every attribute in ``attrs``."""
    attrs = list(attrs)
    if not attrs:
        raise TableError("at least one attribute is required")
    columns = [t._column(a) for a in attrs]
    return partition_from_labeling(t.universe, [tuple(row[c] for c in columns) for row in t.rows])
