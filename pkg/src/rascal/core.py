"""Triangle containers, indexing conventions, and the bilinear closed form.

Triangles are stored as jagged arrays: row ``n`` holds ``n + 1`` integers,
left to right.  The entry at row ``n``, position ``j`` (0-based from the
left) is ``T(r, k)`` with ``r = j`` and ``k = n - j``, so the left edge is
the outside major diagonal (``r = 0``) and the right edge is the outside
minor diagonal (``k = 0``).  Major diagonals run down-left from the right
edge, minor diagonals run down-right from the left edge, and every entry of
row ``n`` satisfies ``r + k = n``.

All entries are plain Python integers, so arithmetic is exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GrtParams:
    """The four constants defining the triangle T(r, k) = c + k*d1 + r*d2 + r*k*d.

    ``c`` is the apex entry, ``d1`` the common difference of the outside
    major diagonal, ``d2`` the common difference of the outside minor
    diagonal, and ``d`` the change in common difference from each diagonal
    to the next (also the constant of the addition rule).  Any four integers
    are valid.
    """

    c: int
    d: int
    d1: int
    d2: int


@dataclass(frozen=True)
class TriangleGrid:
    """Immutable jagged triangle of arbitrary-precision integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        if not rows:
            raise ValueError("a triangle needs at least one row")
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")
            for value in row:
                if not isinstance(value, int) or isinstance(value, bool):
                    raise TypeError(f"row {n} holds {value!r}; entries must be integers")
        object.__setattr__(self, "rows", rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def entry_at(self, r: int, k: int) -> int:
        """Entry T(r, k), stored at row ``r + k``, position ``r`` from the left."""
        if r < 0 or k < 0 or r + k > self.n_rows - 1:
            raise IndexError(
                f"(r={r}, k={k}) is outside a triangle with {self.n_rows} rows"
            )
        return self.rows[r + k][r]

    def major_diagonal(self, r: int) -> list[int]:
        """All stored entries T(r, k) of the r-th major diagonal, k ascending."""
        if not 0 <= r < self.n_rows:
            raise IndexError(f"no major diagonal {r} in a triangle with {self.n_rows} rows")
        return [self.rows[r + k][r] for k in range(self.n_rows - r)]

    def minor_diagonal(self, k: int) -> list[int]:
        """All stored entries T(r, k) of the k-th minor diagonal, r ascending."""
        if not 0 <= k < self.n_rows:
            raise IndexError(f"no minor diagonal {k} in a triangle with {self.n_rows} rows")
        return [self.rows[r + k][r] for r in range(self.n_rows - k)]


@dataclass(frozen=True)
class Diamond:
    """Square block of cells {(top_r + i, top_k + j) : 0 <= i, j < side}."""

    top_r: int
    top_k: int
    side: int

    def __post_init__(self) -> None:
        if self.top_r < 0 or self.top_k < 0:
            raise ValueError(
                f"diamond top must have nonnegative indices, got ({self.top_r}, {self.top_k})"
            )
        if self.side < 2:
            raise ValueError(f"diamond side must be at least 2, got {self.side}")

    def cells(self) -> list[tuple[int, int]]:
        """All side*side cells, row-major in (i, j)."""
        return [
            (self.top_r + i, self.top_k + j)
            for i in range(self.side)
            for j in range(self.side)
        ]

    def boundary_cells(self) -> list[tuple[int, int]]:
        """The 4*(side - 1) cells with i or j on the rim, each listed once."""
        s = self.side
        return [
            (self.top_r + i, self.top_k + j)
            for i in range(s)
            for j in range(s)
            if i in (0, s - 1) or j in (0, s - 1)
        ]

    def fits_within(self, n_rows: int) -> bool:
        """True when the deepest cell, on row top_r + top_k + 2*(side - 1), exists."""
        return self.top_r + self.top_k + 2 * (self.side - 1) <= n_rows - 1


def closed_form_entry(params: GrtParams, r: int, k: int) -> int:
    """Evaluate the closed form c + k*d1 + r*d2 + r*k*d at (r, k)."""
    if r < 0 or k < 0:
        raise ValueError(f"diagonal indices must be nonnegative, got (r={r}, k={k})")
    return params.c + k * params.d1 + r * params.d2 + r * k * params.d


def major_diagonal(params: GrtParams, r: int, count: int) -> list[int]:
    """First ``count`` terms of the r-th major diagonal.

    An arithmetic sequence: first term ``c + r*d2``, common difference
    ``d1 + r*d``.
    """
    if r < 0:
        raise ValueError(f"diagonal index must be nonnegative, got {r}")
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    first = params.c + r * params.d2
    step = params.d1 + r * params.d
    return [first + k * step for k in range(count)]


def minor_diagonal(params: GrtParams, k: int, count: int) -> list[int]:
    """First ``count`` terms of the k-th minor diagonal.

    An arithmetic sequence: first term ``c + k*d1``, common difference
    ``d2 + k*d``.
    """
    if k < 0:
        raise ValueError(f"diagonal index must be nonnegative, got {k}")
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    first = params.c + k * params.d1
    step = params.d2 + k * params.d
    return [first + r * step for r in range(count)]
