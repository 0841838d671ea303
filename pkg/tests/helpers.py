"""Shared builders for test triangles and parameter sweeps."""

from itertools import product

from hypothesis import strategies as st

from rascal import Boundary, GrtParams, generate_by_addition, generate_by_multiplication


def sweep_params(lo=-3, hi=3):
    """Every (c, d, d1, d2) with all four components in [lo, hi]."""
    values = range(lo, hi + 1)
    return [GrtParams(c, d, d1, d2) for c, d, d1, d2 in product(values, repeat=4)]


def u_style_grid(n_rows=6):
    """Addition rule, constant 1, over an all-ones major edge and a doubling minor edge.

    Satisfies the addition rule everywhere, but no single multiplication
    constant fits all diamonds, so it classifies as addition-only.
    """
    doubling = tuple(2**i for i in range(n_rows))
    boundary = Boundary(1, (1,) * n_rows, doubling)
    return generate_by_addition(boundary, 1)


def v_style_grid(n_rows=6):
    """Multiplication rule, constant 0, over doubling edges; entries are 2**(r+k).

    Satisfies the multiplication rule everywhere, but no single addition
    constant fits all diamonds, so it classifies as multiplication-only.
    """
    doubling = tuple(2**i for i in range(n_rows))
    boundary = Boundary(1, doubling, doubling)
    return generate_by_multiplication(boundary, 0)


@st.composite
def boundaries(draw, lo=-6, hi=6, min_rows=2, max_rows=7):
    """Arbitrary (not necessarily arithmetic) boundaries, zeros included."""
    apex = draw(st.integers(lo, hi))
    tail = draw(st.integers(min_rows - 1, max_rows - 1))
    major = [apex] + draw(st.lists(st.integers(lo, hi), min_size=tail, max_size=tail))
    minor = [apex] + draw(st.lists(st.integers(lo, hi), min_size=tail, max_size=tail))
    return Boundary(apex, major, minor)


def walk_rim(top_r, top_k, side):
    """Rim of a diamond by walking its four sides, one corner per side.

    Independent of the set-filter enumeration the library uses; each side
    contributes side - 1 cells, 4*(side - 1) in total.
    """
    s = side - 1
    cells = [(top_r + i, top_k) for i in range(s)]
    cells += [(top_r + s, top_k + j) for j in range(s)]
    cells += [(top_r + s - i, top_k + s) for i in range(s)]
    cells += [(top_r, top_k + s - j) for j in range(s)]
    return cells
