import pytest
import sympy
from hypothesis import given, settings

from pfaffmf import (PolyMatrix, SkewPolyMatrix, congruence_transform, determinant, parse_poly,
                     pf_adjoint, pfaffian, sub_pfaffians, variables)
from pfaffmf.skew import NotSkewError, ShapeError, standard_symplectic, verify_adjoint_identity
from pfaffmf.samples import block_diagonal_matrix

from conftest import invertible, matching_pfaffian, skew_linear, sympy_matrix, to_sympy


@given(skew_linear())
@settings(max_examples=25, deadline=None)
def test_pfaffian_matches_matching_sum(m):
    assert pfaffian(m) == matching_pfaffian(m)


@given(skew_linear(4))
@settings(max_examples=25, deadline=None)
def test_pfaffian_squared_is_sympy_det(m):
    assert sympy.expand(to_sympy(pfaffian(m)) ** 2 - sympy_matrix(m).det(method="berkowitz")) == 0


@given(skew_linear())
@settings(max_examples=15, deadline=None)
def test_adjoint_identity(m):
    assert verify_adjoint_identity(m)
    assert pfaffian(m) ** 2 == determinant(m)


@given(skew_linear(), invertible())
@settings(max_examples=10, deadline=None)
def test_congruence_scaling(m, g):
    assert pfaffian(congruence_transform(m, g)) == pfaffian(m) * g.det()


def test_small_pfaffians():
    x = variables()
    j = PolyMatrix([[0, "x0"], [parse_poly("-x0"), 0]])
    assert pfaffian(j) == x[0]
    assert pfaffian(PolyMatrix([], rows=0, cols=0)) == 1
    m4 = PolyMatrix.constant(standard_symplectic(4))
    assert pfaffian(m4) == 1
    assert pfaffian(block_diagonal_matrix()) == x[0] * x[1] * x[2]


def test_sub_pfaffians_give_adjoint_entries():
    m = block_diagonal_matrix()
    subs = sub_pfaffians(m)
    adj = pf_adjoint(m)
    assert len(subs) == 15
    for (i, j), p in subs.items():
        assert adj[i, j] == (p if (i + j) % 2 == 0 else -p)
    x = variables()
    assert subs[(0, 1)] == x[1] * x[2]
    assert subs[(0, 2)].is_zero()


def test_errors():
    with pytest.raises(NotSkewError):
        pfaffian(PolyMatrix([["x0", "x1"], ["x1", 0]]))
    with pytest.raises(ShapeError):
        pfaffian(PolyMatrix([[0, 0, 0]] * 3))
    with pytest.raises(ShapeError):
        pfaffian(PolyMatrix([[0, "x0"]]))
    with pytest.raises(ShapeError):
        sub_pfaffians(PolyMatrix.constant(standard_symplectic(4)))
    with pytest.raises(NotSkewError):
        SkewPolyMatrix([["x0", 0], [0, 0]])


def test_matrix_algebra():
    a = PolyMatrix([["x0", "x1"], ["x2", "x3"]])
    i2 = PolyMatrix.identity(2)
    assert a @ i2 == a and i2 @ a == a
    assert a.T.T == a
    assert (a - a).is_zero()
    assert determinant(a) == parse_poly("x0*x3 - x1*x2")
    assert PolyMatrix.block([[a, a], [a, a]]).shape == (4, 4)
