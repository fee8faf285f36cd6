from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pfaffmf import Poly, QMatrix, parse_poly, span_dimension, variables
from pfaffmf.ring import PolySyntaxError, kernel_of_rows, monomial_basis, rank_of_rows, rref

from conftest import coeffs, polys, to_sympy


@given(polys(2), polys(2), polys(2))
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.zero()


@given(polys(2), polys(2))
@settings(max_examples=60, deadline=None)
def test_product_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(polys())
@settings(max_examples=80, deadline=None)
def test_parse_roundtrip(p):
    assert parse_poly(str(p)) == p


def test_parse_examples():
    x = variables()
    assert parse_poly("x0*x1 - 1/2*x2^2") == x[0] * x[1] - x[2] * x[2] * Fraction(1, 2)
    assert parse_poly(" - x3 + 2 ") == Poly.const(2) - x[3]
    assert parse_poly("x0*x0") == x[0] ** 2
    assert parse_poly("0").is_zero()


@pytest.mark.parametrize("text", ["", "x", "x9", "1/0", "x0**2", "x0 +", "2x0", "y1"])
def test_parse_errors(text):
    with pytest.raises(PolySyntaxError):
        parse_poly(text)


def test_degree_and_homogeneity():
    x = variables()
    p = x[0] * x[1] + x[2] ** 2
    assert p.degree == 2 and p.is_homogeneous(2) and not p.is_homogeneous(1)
    assert not (p + x[0]).is_homogeneous()
    assert Poly.zero().is_homogeneous(7)


@given(st.lists(coeffs, min_size=15, max_size=15))
def test_coeff_vector_roundtrip(vec):
    p = Poly.from_coeff_vector(vec, 2)
    assert p.coeff_vector(2) == list(vec)


def test_monomial_basis_counts():
    assert [len(monomial_basis(5, d)) for d in range(5)] == [1, 5, 15, 35, 70]
    assert len(set(monomial_basis(5, 3))) == 35


def test_evaluate_and_ratio():
    x = variables()
    p = x[0] * x[1] - x[2] * 3
    assert p.evaluate([2, 5, 1, 0, 0]) == 7
    assert (p * Fraction(-2, 3)).ratio_to(p) == Fraction(-2, 3)
    assert (p + x[3]).ratio_to(p) is None


def test_variable_count_mismatch():
    with pytest.raises(ValueError):
        Poly.var(0, 3) + Poly.var(0, 5)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_rank_and_kernel_match_sympy(rows):
    m = sympy.Matrix(rows)
    assert rank_of_rows(rows, 5) == m.rank()
    ker = kernel_of_rows(rows, 5)
    assert len(ker) == 5 - m.rank()
    for v in ker:
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)


def test_rref_pivots():
    red, piv = rref([[2, 4, 0], [1, 2, 1]], 3)
    assert piv == [0, 2]
    assert red[0][0] == 1 and red[1][2] == 1


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4))
@settings(max_examples=60, deadline=None)
def test_qmatrix_det_inverse(rows):
    q = QMatrix(rows)
    assert q.det() == sympy.Matrix(rows).det()
    if q.det():
        assert q @ q.inverse() == QMatrix.identity(4)


def test_qmatrix_basics():
    q = QMatrix([[1, 2], [3, 4]])
    assert q.shape == (2, 2)
    assert q.T == QMatrix([[1, 3], [2, 4]])
    assert q ** 2 == q @ q
    assert QMatrix([[0, 1], [-1, 0]]).is_skew()
    with pytest.raises(ValueError):
        QMatrix([[1, 2], [3]])


def test_span_dimension():
    x = variables()
    assert span_dimension([x[0], x[1], x[0] + x[1]], 1) == 2
    assert span_dimension([x[0] * x[1], x[1] * x[0] * 2], 2) == 1
    assert span_dimension([], 2) == 0
