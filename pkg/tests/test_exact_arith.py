from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from stepcone.errors import DimensionMismatch
from stepcone.exact_arith import (DualScalar, Q, Subspace, dual_sign, format_q,
                                  in_span, kernel_basis, primitive, rank, solve)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


def test_q_parses_strings_and_rejects_floats():
    assert Q("-3/6") == Fraction(-1, 2)
    assert Q(4) == 4
    with pytest.raises(ValueError):
        Q("0.5")
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(TypeError):
        Q(True)


def test_format_q_is_canonical():
    assert format_q(Fraction(4, 2)) == "2"
    assert format_q(Fraction(-2, 4)) == "-1/2"
    assert format_q(Fraction(0)) == "0"


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * (1 / a) == 1
    assert a + (-a) == 0


def test_kernel_basis_examples():
    K = kernel_basis([(1, 0, 0)], 3)
    assert len(K) == 2 and all(v[0] == 0 for v in K)
    assert kernel_basis([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3) == []
    (v,) = kernel_basis([(1, 1), (2, 2)], 2)
    assert v[0] == -v[1] != 0


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), max_size=5))
def test_kernel_basis_rank_nullity(rows):
    B = kernel_basis(rows, 4)
    for v in B:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    assert rank(rows, 4) + len(B) == 4


def test_in_span_examples():
    assert in_span([(1, 0)], (2, 0))
    assert not in_span([(1, 0)], (0, 1))
    assert in_span([(1, 1), (1, -1)], (3, 5))
    with pytest.raises(DimensionMismatch):
        in_span([(1, 0)], (1, 0, 0))


def test_solve_and_inconsistency():
    assert solve([(1, 1), (1, -1)], (3, 1), 2) == (2, 1)
    assert solve([(1, 1), (2, 2)], (1, 3), 2) is None


def test_primitive_keeps_sign():
    assert primitive((Fraction(1, 2), Fraction(-3, 4))) == (2, -3)
    assert primitive((0, -6, 4)) == (0, -3, 2)


def test_dual_sign_examples():
    assert dual_sign(DualScalar(Fraction(1), Fraction(100))) == 1
    assert dual_sign(DualScalar(Fraction(0), Fraction(1))) == -1
    assert dual_sign(DualScalar(Fraction(0), Fraction(0))) == 0


@given(rationals, rationals, rationals.filter(bool))
def test_dual_sign_scales(s, i, t):
    d = DualScalar(s, i)
    sgn = 1 if t > 0 else -1
    assert dual_sign(d * t) == sgn * dual_sign(d)


def test_subspace_operations():
    X = Subspace.full(3)
    A = Subspace.from_equations([(1, 0, 0)], 3)
    B = Subspace.from_equations([(0, 1, 0)], 3)
    assert A.dimension == 2 and A <= X and not X <= A
    assert A.intersect(B) == Subspace(3, [(0, 0, 5)])
    assert A + B == X
    assert Subspace.zero(3).dimension == 0 and (0, 0, 0) in Subspace.zero(3)
    assert A.project((1, 2, 3)) == (0, 2, 3)
    assert Subspace(2, [(2, 2)]) == Subspace(2, [(-1, -1)])
