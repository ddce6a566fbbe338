from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from homcat import exactlin as xl


def M(rows):
    return xl.from_rows(rows)


def V(entries):
    v = xl.zeros(len(entries))
    for i, x in enumerate(entries):
        v[i] = xl.frac(x)
    return v


# ---------------------------------------------------------------- tensor_map

def test_tensor_map_identity():
    assert xl.array_eq(xl.tensor_map(xl.identity(2), xl.identity(3)), xl.identity(6))


def test_tensor_map_swap_block():
    f = M([[0, 1], [1, 0]])
    got = xl.tensor_map(f, xl.identity(2))
    want = M([
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
    ])
    assert xl.array_eq(got, want)


small_rational = st.fractions(
    min_value=Fraction(-3), max_value=Fraction(3), max_denominator=4
)


def rational_matrix(n):
    return st.lists(
        st.lists(small_rational, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(M)


@settings(max_examples=30, deadline=None)
@given(rational_matrix(2), rational_matrix(2), rational_matrix(2), rational_matrix(2))
def test_tensor_map_functorial(f, g, f2, g2):
    # oracle: direct matrix computation on both sides
    lhs = xl.mat_mul(xl.tensor_map(f, g), xl.tensor_map(f2, g2))
    rhs = xl.tensor_map(xl.mat_mul(f, f2), xl.mat_mul(g, g2))
    assert xl.array_eq(lhs, rhs)


# ------------------------------------------------------------------ quotient

def test_quotient_one_generator():
    # row reduction oracle: rref([1,-1]) pivots column 0, free column 1
    proj, sect = xl.quotient_by_span(2, [V([1, -1])])
    assert proj.shape == (1, 2)
    assert xl.array_eq(proj, M([[1, 1]]))
    assert xl.array_eq(xl.mat_mul(proj, sect), xl.identity(1))
    assert xl.is_zero(xl.mat_vec(proj, V([1, -1])))


def test_quotient_empty_span():
    proj, sect = xl.quotient_by_span(3, [])
    assert xl.array_eq(proj, xl.identity(3))
    assert xl.array_eq(sect, xl.identity(3))


def test_quotient_full_span():
    proj, sect = xl.quotient_by_span(2, [V([1, 0]), V([0, 1])])
    assert proj.shape == (0, 2)
    assert sect.shape == (2, 0)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(small_rational, min_size=3, max_size=3), min_size=0, max_size=3))
def test_quotient_properties(gen_rows):
    gens = [V(row) for row in gen_rows]
    proj, sect = xl.quotient_by_span(3, gens)
    q = proj.shape[0]
    assert xl.array_eq(xl.mat_mul(proj, sect), xl.identity(q))
    for g in gens:
        assert xl.is_zero(xl.mat_vec(proj, g))
    # section then projection is the identity modulo span: rank count
    assert q == 3 - xl.rank(xl.from_columns(gens, dim=3)) if gens else q == 3


# -------------------------------------------------------------------- kernel

def test_kernel_zero_map():
    assert xl.array_eq(xl.kernel_inclusion(xl.zeros((3, 3))), xl.identity(3))


def test_kernel_injective():
    assert xl.kernel_inclusion(xl.identity(3)).shape == (3, 0)


def test_kernel_row():
    inc = xl.kernel_inclusion(M([[1, -1]]))
    assert inc.shape == (2, 1)
    # spanned by e1 + e2 per the echelon convention
    assert xl.array_eq(inc, M([[1], [1]]))


@settings(max_examples=25, deadline=None)
@given(rational_matrix(3))
def test_kernel_rank_nullity(f):
    inc = xl.kernel_inclusion(f)
    assert inc.shape[1] == 3 - xl.rank(f)
    assert xl.is_zero(xl.mat_mul(f, inc))


# --------------------------------------------------------------------- solve

def test_solve_identity():
    x = xl.solve_linear(xl.identity(2), V([1, 2]))
    assert xl.array_eq(x, V([1, 2]))


def test_solve_inconsistent():
    assert xl.solve_linear(M([[1, 1], [2, 2]]), V([1, 3])) is None


def test_solve_free_variable_convention():
    x = xl.solve_linear(M([[1, 1], [2, 2]]), V([1, 2]))
    assert xl.array_eq(x, V([1, 0]))


# -------------------------------------------------------------------- invert

def test_invert_identity():
    assert xl.array_eq(xl.invert(xl.identity(4)), xl.identity(4))


def test_invert_involution():
    f = M([[0, 1], [1, 0]])
    assert xl.array_eq(xl.invert(f), f)


def test_invert_shear():
    # Gauss-Jordan oracle
    assert xl.array_eq(xl.invert(M([[1, 1], [0, 1]])), M([[1, -1], [0, 1]]))


def test_invert_singular():
    assert xl.invert(M([[1, 1], [2, 2]])) is None


def test_invert_nonsquare_raises():
    with pytest.raises(xl.DimensionError):
        xl.invert(xl.zeros((2, 3)))


@settings(max_examples=25, deadline=None)
@given(rational_matrix(3))
def test_invert_exact_roundtrip(f):
    inv = xl.invert(f)
    if inv is not None:
        assert xl.array_eq(xl.mat_mul(f, inv), xl.identity(3))
        assert xl.array_eq(xl.mat_mul(inv, f), xl.identity(3))


def test_left_inverse():
    f = M([[1, 0], [2, 1], [3, 3]])
    li = xl.left_inverse(f)
    assert xl.array_eq(xl.mat_mul(li, f), xl.identity(2))


# --------------------------------------------------------------- conventions

def test_scalar_wire_format():
    assert xl.parse_scalar("2/4") == Fraction(1, 2)
    assert xl.format_scalar(Fraction(-3, 6)) == "-1/2"
    assert xl.format_scalar(Fraction(5)) == "5"


def test_flatten_unflatten():
    dims = (2, 3, 4)
    for flat in range(24):
        assert xl.flatten_index(xl.unflatten_index(flat, dims), dims) == flat


def test_flip_map():
    fl = xl.flip_map(2, 3)
    u, v = V([1, 2]), V([3, 4, 5])
    assert xl.array_eq(xl.mat_vec(fl, xl.tensor_vec(u, v)), xl.tensor_vec(v, u))
