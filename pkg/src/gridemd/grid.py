"""Integer grid histograms and the view transforms the distance measures use.

A grid is an m x n array of nonnegative integer masses stored row-major.
Grids are immutable and every operation here is a pure function, so values
can be shared freely between threads. All arithmetic uses Python integers,
which are unbounded: totals and transport costs cannot overflow no matter
how large the grid or its cells are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadTokenError, EmptyGridError, RaggedRowsError

MassVector = tuple[int, ...]
"""A 1D sequence of nonnegative integer masses."""


@dataclass(frozen=True)
class GridHistogram:
    """An immutable rows x cols grid of nonnegative integer masses.

    ``cells`` holds the masses in row-major order; cell (i, j) lives at
    flat index ``i * cols + j``.
    """

    rows: int
    cols: int
    cells: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"grid dimensions must be >= 1, got {self.rows}x{self.cols}")
        if len(self.cells) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} cells for a "
                f"{self.rows}x{self.cols} grid, got {len(self.cells)}"
            )
        for v in self.cells:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"cells must be nonnegative integers, got {v!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GridHistogram":
        """Build a grid from a list of equal-length rows."""
        if not rows:
            raise EmptyGridError("no rows")
        ncols = len(rows[0])
        flat: list[int] = []
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise RaggedRowsError(f"row {r} has {len(row)} entries, expected {ncols}")
            flat.extend(row)
        return cls(len(rows), ncols, tuple(flat))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def cell(self, i: int, j: int) -> int:
        return self.cells[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        n = self.cols
        return [list(self.cells[i * n : (i + 1) * n]) for i in range(self.rows)]


def parse_grid(text: str) -> GridHistogram:
    """Parse grid text: one row per line, whitespace- or comma-separated
    nonnegative decimal integers. Blank lines are ignored.
    """
    rows: list[list[int]] = []
    ncols = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.replace(",", " ").split()
        if not tokens:
            continue
        if ncols < 0:
            ncols = len(tokens)
        elif len(tokens) != ncols:
            raise RaggedRowsError(
                f"line {lineno}: {len(tokens)} tokens, expected {ncols}"
            )
        row = []
        for tok in tokens:
            if not (tok.isascii() and tok.isdigit()):
                raise BadTokenError(f"line {lineno}: bad token {tok!r}")
            row.append(int(tok))
        rows.append(row)
    if not rows:
        raise EmptyGridError("grid text contains no rows")
    return GridHistogram.from_rows(rows)


def vec_row_major(g: GridHistogram) -> MassVector:
    """Flatten a grid to a 1D mass vector in row-major (reading) order."""
    return g.cells


def rotate90(g: GridHistogram) -> GridHistogram:
    """Quarter turn counterclockwise: output cell (n-1-j, i) = input cell (i, j)."""
    m, n = g.rows, g.cols
    out = [0] * (m * n)
    cells = g.cells
    for i in range(m):
        base = i * n
        for j in range(n):
            out[(n - 1 - j) * m + i] = cells[base + j]
    return GridHistogram(n, m, tuple(out))


def transpose(g: GridHistogram) -> GridHistogram:
    """Swap rows and columns: output cell (j, i) = input cell (i, j)."""
    m, n = g.rows, g.cols
    out = [0] * (m * n)
    cells = g.cells
    for i in range(m):
        base = i * n
        for j in range(n):
            out[j * m + i] = cells[base + j]
    return GridHistogram(n, m, tuple(out))


def total_mass(g: GridHistogram) -> int:
    """Sum of all cells."""
    return sum(g.cells)


def format_grid(g: GridHistogram, sep: str = " ") -> str:
    """Render a grid back to the text form accepted by parse_grid."""
    return "\n".join(sep.join(str(v) for v in row) for row in g.to_rows())
