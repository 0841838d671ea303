"""Classify raw triangles: arithmetic diagonals, parameter fitting, rule detection.

All scans run in row-major order (increasing row, then increasing position
from the left), so counterexamples and witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .core import GrtParams, TriangleGrid
from .generate import mult_constant

VERDICT_GRT = "grt"
VERDICT_ADDITION_ONLY = "addition-only"
VERDICT_MULTIPLICATION_ONLY = "multiplication-only"
VERDICT_NEITHER = "neither"


class TooSmallError(ValueError):
    """Grid has no interior diamond (fewer than 3 rows)."""


class UnderDeterminedError(ValueError):
    """Grid has too few rows to pin down all four parameters."""


class NotGrtError(ValueError):
    """Grid disagrees with the closed form; carries the first mismatching cell."""

    def __init__(self, r: int, k: int, expected: int, actual: int):
        super().__init__(
            f"entry (r={r}, k={k}) is {actual}, but the parameters fitted from "
            f"rows 0-2 predict {expected}"
        )
        self.r = r
        self.k = k
        self.expected = expected
        self.actual = actual


@dataclass(frozen=True)
class DiagonalReport:
    """Arithmetic-sequence analysis of one stored diagonal.

    Exactly one of ``common_difference`` / ``first_violation`` is set for
    diagonals with at least 3 entries.  Shorter diagonals are vacuously
    arithmetic: they always carry a common difference (0 for singletons) and
    ``under_determined`` is flagged so callers can weigh the evidence.
    """

    kind: str  # "major" or "minor"
    index: int
    first_term: int
    common_difference: int | None
    first_violation: tuple[int, int, int] | None  # (position, expected, actual)
    under_determined: bool

    @property
    def is_arithmetic(self) -> bool:
        return self.common_difference is not None


@dataclass(frozen=True)
class RuleWitness:
    """One diamond, named by its south cell, and the rule constant it implies."""

    r: int
    k: int
    implied_constant: int


@dataclass(frozen=True)
class RuleReport:
    """Either the single constant every diamond implies, or two diamonds that disagree."""

    rule: str  # "addition" or "multiplication"
    constant: int | None
    witnesses: tuple[RuleWitness, RuleWitness] | None

    def __post_init__(self) -> None:
        if (self.constant is None) == (self.witnesses is None):
            raise ValueError("exactly one of constant / witnesses must be present")


@dataclass(frozen=True)
class Classification:
    """Verdict plus the evidence it rests on.

    ``params`` is set exactly when the verdict is "grt"; the rule constants,
    when detected, live in the two rule reports.
    """

    verdict: str
    params: GrtParams | None
    diagonals: tuple[DiagonalReport, ...]
    addition: RuleReport
    multiplication: RuleReport


def diagonal_reports(grid: TriangleGrid) -> list[DiagonalReport]:
    """One report per major diagonal and per minor diagonal, in index order."""
    reports = [
        _analyze_sequence("major", r, grid.major_diagonal(r)) for r in range(grid.n_rows)
    ]
    reports += [
        _analyze_sequence("minor", k, grid.minor_diagonal(k)) for k in range(grid.n_rows)
    ]
    return reports


def _analyze_sequence(kind: str, index: int, seq: list[int]) -> DiagonalReport:
    if len(seq) == 1:
        return DiagonalReport(kind, index, seq[0], 0, None, True)
    diff = seq[1] - seq[0]
    for pos in range(2, len(seq)):
        expected = seq[pos - 1] + diff
        if seq[pos] != expected:
            return DiagonalReport(kind, index, seq[0], None, (pos, expected, seq[pos]), False)
    return DiagonalReport(kind, index, seq[0], diff, None, len(seq) < 3)


def fit_grt(grid: TriangleGrid) -> GrtParams:
    """Fit (c, d, d1, d2) from rows 0-2 and verify every entry against the closed form.

    c = T(0,0), d1 = T(0,1) - T(0,0), d2 = T(1,0) - T(0,0) and
    d = T(1,1) - T(0,1) - T(1,0) + T(0,0); the smallest prefix that
    determines all four.  Raises UnderDeterminedError below 3 rows and
    NotGrtError at the first entry (row-major) that breaks the fit.
    """
    if grid.n_rows < 3:
        raise UnderDeterminedError(
            f"need at least 3 rows to determine the parameters, got {grid.n_rows}"
        )
    rows = grid.rows
    c = rows[0][0]
    d1 = rows[1][0] - c
    d2 = rows[1][1] - c
    d = rows[2][1] - rows[1][0] - rows[1][1] + c
    for n, row in enumerate(rows):
        for r, actual in enumerate(row):
            k = n - r
            expected = c + k * d1 + r * d2 + r * k * d
            if actual != expected:
                raise NotGrtError(r, k, expected, actual)
    return GrtParams(c, d, d1, d2)


def detect_addition_rule(grid: TriangleGrid) -> RuleReport:
    """Constant d with south = east + west + d - north over every interior diamond."""
    return _detect_rule(grid, "addition", lambda s, e, w, n: s - e - w + n)


def detect_multiplication_rule(grid: TriangleGrid) -> RuleReport:
    """Constant D with south*north = east*west + D over every interior diamond.

    The multiplicative form needs no division, so zero entries cannot crash
    the scan; on triangles without zeros it coincides with the quotient rule.
    """
    return _detect_rule(grid, "multiplication", lambda s, e, w, n: s * n - e * w)


def classify(grid: TriangleGrid) -> Classification:
    """Run diagonal analysis, fitting, and both rule detectors; combine verdicts.

    Verdict "grt" exactly when the fit succeeds; "addition-only" or
    "multiplication-only" when exactly one detector finds a constant;
    "neither" otherwise.
    """
    diagonals = tuple(diagonal_reports(grid))
    addition = detect_addition_rule(grid)  # TooSmallError propagates
    multiplication = detect_multiplication_rule(grid)
    try:
        params = fit_grt(grid)
    except NotGrtError:
        params = None

    if params is not None:
        verdict = VERDICT_GRT
        # Forced by the closed form; a mismatch here is an internal bug.
        assert addition.constant == params.d
        assert multiplication.constant == mult_constant(params)
    elif addition.constant is not None and multiplication.constant is None:
        verdict = VERDICT_ADDITION_ONLY
    elif multiplication.constant is not None and addition.constant is None:
        verdict = VERDICT_MULTIPLICATION_ONLY
    else:
        verdict = VERDICT_NEITHER
    return Classification(verdict, params, diagonals, addition, multiplication)


def _interior_diamonds(grid: TriangleGrid) -> Iterator[tuple[int, int, int, int, int, int]]:
    """Yield (r, k, south, east, west, north) for interior cells, row-major."""
    rows = grid.rows
    for n in range(2, len(rows)):
        for r in range(1, n):
            yield r, n - r, rows[n][r], rows[n - 1][r], rows[n - 1][r - 1], rows[n - 2][r - 1]


def _detect_rule(
    grid: TriangleGrid, rule: str, implied: Callable[[int, int, int, int], int]
) -> RuleReport:
    if grid.n_rows < 3:
        raise TooSmallError(f"rule detection needs at least 3 rows, got {grid.n_rows}")
    first: RuleWitness | None = None
    for r, k, south, east, west, north in _interior_diamonds(grid):
        constant = implied(south, east, west, north)
        if first is None:
            first = RuleWitness(r, k, constant)
        elif constant != first.implied_constant:
            return RuleReport(rule, None, (first, RuleWitness(r, k, constant)))
    assert first is not None
    return RuleReport(rule, first.implied_constant, None)
