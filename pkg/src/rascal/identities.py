"""Exact checks for the structural identities of parameterized triangles.

Each check evaluates one concrete instance and reports holds / first failure;
sweeping index ranges is left to callers.  Means are compared as exact
fractions, never floats.  The relation checks accept an ``entry`` override
(an ``(r, k) -> int`` source) so tests can feed perturbed values and confirm
the checks actually bite; by default entries come from the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core import Diamond, GrtParams, closed_form_entry

EntryFn = Callable[[int, int], int]


class InapplicableCheckError(ValueError):
    """The identity's domain restriction rules out these parameters."""


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one identity instance; ``first_failure`` is (location, lhs, rhs)."""

    name: str
    holds: bool
    first_failure: tuple | None


def _result(name: str, location: tuple, lhs, rhs) -> IdentityCheck:
    if lhs == rhs:
        return IdentityCheck(name, True, None)
    return IdentityCheck(name, False, (location, lhs, rhs))


def _entry_fn(params: GrtParams, entry: EntryFn | None) -> EntryFn:
    if entry is not None:
        return entry
    return lambda r, k: closed_form_entry(params, r, k)


def row_sum_formula(params: GrtParams, n: int) -> int:
    """Row sum s_n = (d/6)n^3 + ((d1+d2)/2)n^2 + (c + (d1+d2)/2 - d/6)n + c.

    Evaluated as one exact fraction over 6.  The result is integral for every
    integer parameter choice; a non-integral value would mean a broken
    invariant, not bad input, and raises ArithmeticError.
    """
    if n < 0:
        raise ValueError(f"row index must be nonnegative, got {n}")
    c, d, d1, d2 = params.c, params.d, params.d1, params.d2
    numerator = d * n**3 + 3 * (d1 + d2) * n**2 + (6 * c + 3 * (d1 + d2) - d) * n + 6 * c
    value = Fraction(numerator, 6)
    if value.denominator != 1:
        raise ArithmeticError(f"row sum for n={n} came out non-integral: {value}")
    return value.numerator


def odd_diamond_check(params: GrtParams, top_r: int, top_k: int, half: int) -> IdentityCheck:
    """Mean of the 8*half rim entries of a (2*half + 1)-side diamond equals its center entry."""
    if half < 1:
        raise ValueError(f"half must be at least 1, got {half}")
    rim = Diamond(top_r, top_k, 2 * half + 1).boundary_cells()
    mean = Fraction(sum(closed_form_entry(params, r, k) for r, k in rim), len(rim))
    center = closed_form_entry(params, top_r + half, top_k + half)
    return _result("odd-diamond", (top_r, top_k, half), mean, Fraction(center))


def even_diamond_check(params: GrtParams, top_r: int, top_k: int, n: int) -> IdentityCheck:
    """Rim mean of the 2n-side diamond around an inner 2-diamond equals the inner 4-cell mean.

    ``(top_r, top_k)`` names the top of the inner 2-diamond; both indices must
    be at least n - 1 so the outer diamond, whose top sits n - 1 cells up-left,
    stays inside the triangle.  The outer rim has 8n - 4 entries.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if top_r < n - 1 or top_k < n - 1:
        raise ValueError(
            f"outer diamond needs top_r, top_k >= {n - 1}, got ({top_r}, {top_k})"
        )
    inner = [(top_r, top_k), (top_r + 1, top_k), (top_r, top_k + 1), (top_r + 1, top_k + 1)]
    inner_mean = Fraction(sum(closed_form_entry(params, r, k) for r, k in inner), 4)
    outer = Diamond(top_r - (n - 1), top_k - (n - 1), 2 * n).boundary_cells()
    outer_mean = Fraction(sum(closed_form_entry(params, r, k) for r, k in outer), len(outer))
    return _result("even-diamond", (top_r, top_k, n), outer_mean, inner_mean)


def ashley_check(
    params: GrtParams, r: int, k: int, entry: EntryFn | None = None
) -> IdentityCheck:
    """T(r,k) = T(r-1,k) + T(r,k-1) - T(r-2,k-1) + ((2-k)*d - d2), for r >= 2, k >= 1."""
    if r < 2 or k < 1:
        raise ValueError(f"needs r >= 2 and k >= 1, got (r={r}, k={k})")
    t = _entry_fn(params, entry)
    rhs = t(r - 1, k) + t(r, k - 1) - t(r - 2, k - 1) + ((2 - k) * params.d - params.d2)
    return _result("ashley", (r, k), t(r, k), rhs)


def ashley_mod_check(
    params: GrtParams, variant: int, r: int, k: int, entry: EntryFn | None = None
) -> IdentityCheck:
    """Three 5-term rewrites that drop the (2-k)*d - d2 correction term.

    variant 1 (r >= 3, k >= 2):
        T(r,k) = T(r-1,k) + T(r,k-1) - T(r-2,k-1) - T(r-2,k-2) + T(r-3,k-2)
    variant 2 (r, k >= 3):
        T(r,k) = T(r,k-1) + T(r-1,k-1) - T(r-2,k-2) - T(r-2,k-3) + T(r-3,k-3)
    variant 3 (r, k >= 3):
        T(r,k) = T(r-1,k) + T(r-1,k-1) - T(r-2,k-2) - T(r-3,k-2) + T(r-3,k-3)
    """
    t = _entry_fn(params, entry)
    if variant == 1:
        if r < 3 or k < 2:
            raise ValueError(f"variant 1 needs r >= 3 and k >= 2, got (r={r}, k={k})")
        rhs = t(r - 1, k) + t(r, k - 1) - t(r - 2, k - 1) - t(r - 2, k - 2) + t(r - 3, k - 2)
    elif variant == 2:
        if r < 3 or k < 3:
            raise ValueError(f"variant 2 needs r >= 3 and k >= 3, got (r={r}, k={k})")
        rhs = t(r, k - 1) + t(r - 1, k - 1) - t(r - 2, k - 2) - t(r - 2, k - 3) + t(r - 3, k - 3)
    elif variant == 3:
        if r < 3 or k < 3:
            raise ValueError(f"variant 3 needs r >= 3 and k >= 3, got (r={r}, k={k})")
        rhs = t(r - 1, k) + t(r - 1, k - 1) - t(r - 2, k - 2) - t(r - 3, k - 2) + t(r - 3, k - 3)
    else:
        raise ValueError(f"variant must be 1, 2 or 3, got {variant}")
    return _result(f"ashley-mod{variant}", (r, k), t(r, k), rhs)


def column_diff_check(
    params: GrtParams, r: int, k: int, entry: EntryFn | None = None
) -> IdentityCheck:
    """T(r,k) - T(r-1,k+1) and T(r-1,k-1) - T(r-2,k) both equal d2 - d1 + (k-r+1)*d."""
    if r < 2 or k < 1:
        raise ValueError(f"needs r >= 2 and k >= 1, got (r={r}, k={k})")
    t = _entry_fn(params, entry)
    expected = params.d2 - params.d1 + (k - r + 1) * params.d
    for lhs in (t(r, k) - t(r - 1, k + 1), t(r - 1, k - 1) - t(r - 2, k)):
        if lhs != expected:
            return IdentityCheck("column-diff", False, ((r, k), lhs, expected))
    return IdentityCheck("column-diff", True, None)


def t_meg_check(
    params: GrtParams, r: int, k: int, entry: EntryFn | None = None
) -> IdentityCheck:
    """T(r,k) = T(r-1,k-1) + T(0,r+k-2) + T(1,r+k-3) + 2*(d - c), for r >= 1, k >= 2.

    Only defined on triangles with d1 = d2 = 0 (entries c + r*k*d); calling it
    with other parameters raises InapplicableCheckError.
    """
    if params.d1 != 0 or params.d2 != 0:
        raise InapplicableCheckError(
            f"rule needs d1 = d2 = 0, got d1={params.d1}, d2={params.d2}"
        )
    if r < 1 or k < 2:
        raise ValueError(f"needs r >= 1 and k >= 2, got (r={r}, k={k})")
    t = _entry_fn(params, entry)
    rhs = t(r - 1, k - 1) + t(0, r + k - 2) + t(1, r + k - 3) + 2 * (params.d - params.c)
    return _result("tmeg", (r, k), t(r, k), rhs)


def embed_in_rascal(params: GrtParams, window: int = 10) -> tuple[int, int] | None:
    """Offset (r0, k0) at which this triangle sits inside R(r, k) = 1 + r*k, or None.

    An embedding exists exactly when d = 1, c - d1*d2 = 1, and the offsets
    (d1, d2) are valid indices; the window equality T(r, k) = 1 + (d1+r)(d2+k)
    is verified over ``window`` x ``window`` cells before the offset is
    returned.  Algebraic matches at negative offsets are not embeddings.
    """
    if params.d != 1 or params.c - params.d1 * params.d2 != 1:
        return None
    if params.d1 < 0 or params.d2 < 0:
        return None
    r0, k0 = params.d1, params.d2
    for r in range(window):
        for k in range(window):
            if closed_form_entry(params, r, k) != 1 + (r0 + r) * (k0 + k):
                return None
    return (r0, k0)


def multiple_of_rascal(params: GrtParams) -> int | None:
    """Scalar m with T(r,k) = m*(1 + r*k); exists exactly when d = c and d1 = d2 = 0."""
    if params.d == params.c and params.d1 == 0 and params.d2 == 0:
        return params.c
    return None
