from __future__ import annotations

import os
import tempfile
from collections.abc import Iterator, Mapping, Sequence
from pathlib import Path
from typing import Any, Optional, Union

import polars as pl

from .._log import get_logger

logger = get_logger(__name__)


class Column:
    """One output column and its unit."""
    def __init__(self, name: str, units: str = "", notes: str = "") -> None:
        self.name: str = name
        self.units: str = units
        self.notes: str = notes

    def __str__(self) -> str:
        return f"{self.name} ({self.units})" if self.units else self.name


class ResultTable:
    """A named table of results backed by a Polars DataFrame.

    Rows may be appended as dicts, lists of dicts or DataFrames. Files written by
    :meth:`write_csv` start with a ``#`` comment block (header lines and column
    units) and are replaced atomically.
    """
    def __init__(self, name: str, columns: Sequence[Union[Column, tuple[str, str]]] = (), description: str = "") -> None:
        self.name: str = name
        self.description: str = description
        self.columns: dict[str, Column] = {}
        for column in columns:
            if isinstance(column, Column):
                self.columns[column.name] = column
            else:
                self.add_column(*column)
        self.data: pl.DataFrame = pl.DataFrame()

    def add_column(self, name: str, units: str = "", notes: str = "") -> None:
        self.columns[name] = Column(name, units, notes)

    def add_rows(self, rows: Union[pl.DataFrame, Mapping[str, Any], Sequence[Mapping[str, Any]]]) -> None:
        """Append rows; every column must have been declared.

        Raises:
            ValueError: On undeclared columns or incompatible schemas.
        """
        if isinstance(rows, pl.DataFrame):
            frame = rows
        else:
            try:
                frame = pl.DataFrame([rows] if isinstance(rows, Mapping) else list(rows), strict=False)
            except Exception as e:
                raise ValueError(f"Failed to convert rows of '{self.name}' to a DataFrame: {e}") from e
        unknown = [c for c in frame.columns if c not in self.columns]
        if unknown:
            raise ValueError(f"Columns {unknown} are not declared in table '{self.name}'.")
        if frame.is_empty():
            return
        frame = frame.select([c for c in self.columns if c in frame.columns])
        if self.data.is_empty():
            self.data = frame
        else:
            try:
                self.data = pl.concat([self.data, frame], how="diagonal_relaxed")
            except Exception as e:
                raise ValueError(f"Failed to append rows to '{self.name}'. Check for schema compatibility. Error: {e}") from e

    def __iter__(self) -> Iterator[dict[str, Any]]:
        yield from self.data.to_dicts()

    def __len__(self) -> int:
        return self.data.height

    def __str__(self) -> str:
        columns = ", ".join(str(c) for c in self.columns.values())
        head = self.data.head(5) if not self.data.is_empty() else "No rows."
        return f"Table: {self.name}\nDescription: {self.description}\nColumns: {columns}\nRows (first 5):\n{head}"

    def header_lines(self, header: Sequence[str] = ()) -> list[str]:
        lines = [f"# {line}" for line in header]
        units = ", ".join(f"{c.name}[{c.units}]" if c.units else c.name for c in self.columns.values())
        lines.append(f"# columns: {units}")
        return lines

    def _frame(self) -> pl.DataFrame:
        if self.data.is_empty() and not self.data.columns:
            return pl.DataFrame({name: [] for name in self.columns})
        return self.data

    def to_csv_text(self, header: Sequence[str] = (), float_precision: Optional[int] = None) -> str:
        body = self._frame().write_csv(float_precision=float_precision)
        return "\n".join(self.header_lines(header)) + "\n" + body

    def write_csv(self, path: Union[str, Path], header: Sequence[str] = (), float_precision: Optional[int] = None) -> Path:
        path = Path(path)
        atomic_write_text(path, self.to_csv_text(header, float_precision))
        logger.info(f"wrote {len(self)} rows to {path}")
        return path

    def write_gnuplot(self, path: Union[str, Path], x: str, y: str, header: Sequence[str] = ()) -> Path:
        """Whitespace-separated two-column variant of (x, y)."""
        for name in (x, y):
            if name not in self.columns:
                raise ValueError(f"Column '{name}' is not declared in table '{self.name}'.")
        lines = [f"# {line}" for line in header]
        lines.append(f"# {self.columns[x]} {self.columns[y]}")
        if not self.data.is_empty():
            for xv, yv in zip(self.data[x].to_list(), self.data[y].to_list()):
                lines.append(f"{xv!r} {yv!r}")
        path = Path(path)
        atomic_write_text(path, "\n".join(lines) + "\n")
        return path


def atomic_write_text(path: Path, text: str) -> None:
    """Write to a temporary file next to ``path`` and rename it into place."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
