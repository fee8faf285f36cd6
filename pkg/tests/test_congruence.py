import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pfaffmf import (PolyMatrix, QMatrix, congruence_instance, jordan_form, nilpotent_sqrt,
                     skew_congruence_witness, verify_block_vanishing)
from pfaffmf.congruence import (HypothesisError, SpectrumError, _commutant_basis,
                                jordan_matrix)
from pfaffmf.field import NotASquareError
from pfaffmf.generators import random_gl
from pfaffmf.skew import standard_symplectic

LAMBDAS = [Fraction(1), Fraction(4), Fraction(9), Fraction(1, 4)]


def shift(n):
    return QMatrix([[int(j == i + 1) for j in range(n)] for i in range(n)], n, n)


def check_witness(M, A, B, S):
    n = M.n_vars
    Sp = PolyMatrix.constant(S, n)
    rhs = PolyMatrix.constant(A.inverse(), n) @ M @ PolyMatrix.constant(B, n)
    return Sp.T @ M @ Sp == rhs


@pytest.mark.parametrize("size", range(1, 7))
@pytest.mark.parametrize("lam", LAMBDAS)
@pytest.mark.parametrize("sign", [1, -1])
def test_nilpotent_sqrt(size, lam, sign):
    N = shift(size)
    root = nilpotent_sqrt(lam, N, sign)
    assert root.S @ root.S == QMatrix.identity(size) * lam + N
    assert root.s_coefficients[0] == sign * sympy.sqrt(lam)


def test_nilpotent_sqrt_series_coefficients():
    # sqrt(1 + x) = 1 + x/2 - x^2/8 + x^3/16 - ...
    assert nilpotent_sqrt(1, shift(4)).s_coefficients == (1, Fraction(1, 2), Fraction(-1, 8),
                                                           Fraction(1, 16))


def test_nilpotent_sqrt_extension_and_errors():
    root = nilpotent_sqrt(2, shift(3), extension=2)
    assert root.S @ root.S == QMatrix.identity(3) * 2 + shift(3)
    with pytest.raises(NotASquareError):
        nilpotent_sqrt(2, shift(3))
    with pytest.raises(ValueError):
        nilpotent_sqrt(0, shift(2))
    with pytest.raises(ValueError):
        nilpotent_sqrt(1, QMatrix.identity(2))


@st.composite
def jordan_inputs(draw):
    blocks = draw(st.lists(st.tuples(st.sampled_from([1, 2, -3, Fraction(1, 2)]),
                                     st.integers(1, 3)), min_size=1, max_size=3))
    seed = draw(st.integers(0, 10**6))
    merged = {}
    for lam, k in blocks:
        merged.setdefault(Fraction(lam), []).append(k)
    data = tuple((lam, tuple(sorted(ks, reverse=True))) for lam, ks in sorted(merged.items()))
    J = jordan_matrix(data)
    P = random_gl(random.Random(seed), J.rows)
    return data, P @ J @ P.inverse()


@given(jordan_inputs())
@settings(max_examples=40, deadline=None)
def test_jordan_form_recovers_blocks(inp):
    data, B = inp
    jd = jordan_form(B)
    assert jd.blocks == data
    assert jd.T.inverse() @ B @ jd.T == jd.jordan_matrix()


def test_jordan_form_agrees_with_sympy():
    B = QMatrix([[3, 1, 0, 2], [0, 3, 0, 0], [0, 0, 3, 1], [0, 0, 0, 5]])
    jd = jordan_form(B)
    _, J = sympy.Matrix([[sympy.Rational(str(v)) for v in r] for r in B.entries]).jordan_form()
    assert sorted(J[i, i] for i in range(4)) == sorted(jd.jordan_matrix()[i, i] for i in range(4))
    assert sum(J[i, i + 1] for i in range(3)) == sum(jd.jordan_matrix()[i, i + 1] for i in range(3))


def test_jordan_form_spectrum_errors():
    with pytest.raises(SpectrumError):
        jordan_form(QMatrix([[0, 2], [1, 0]]))
    with pytest.raises(SpectrumError):
        jordan_form(QMatrix([[0, 1], [0, 0]]))


def test_witness_small_examples():
    zero = PolyMatrix.zeros(2, 2)
    S = skew_congruence_witness(zero, QMatrix.identity(2), QMatrix([[4, 1], [0, 4]]))
    assert S == QMatrix([[2, Fraction(1, 4)], [0, 2]])
    J = PolyMatrix.constant(standard_symplectic(2))
    S = skew_congruence_witness(J, QMatrix.identity(2), QMatrix.identity(2) * 4)
    assert S == QMatrix.identity(2) * 2
    S = skew_congruence_witness(J, QMatrix.identity(2), QMatrix.identity(2) * 4, sign=-1)
    assert S == QMatrix.identity(2) * -2


def test_witness_hypothesis_errors():
    J = PolyMatrix.constant(standard_symplectic(2))
    with pytest.raises(HypothesisError):
        skew_congruence_witness(J, QMatrix.identity(2), QMatrix([[4, 1], [0, 4]]))
    zero = PolyMatrix.zeros(2, 2)
    with pytest.raises(SpectrumError):
        skew_congruence_witness(zero, QMatrix.identity(2), QMatrix([[0, 2], [1, 0]]))
    with pytest.raises(NotASquareError):
        skew_congruence_witness(zero, QMatrix.identity(2), QMatrix.identity(2) * 2)
    S = skew_congruence_witness(zero, QMatrix.identity(2), QMatrix.identity(2) * 2, extension=2)
    assert S @ S == QMatrix.identity(2) * 2


@pytest.mark.parametrize("seed", range(8))
def test_generated_instances(seed):
    rng = random.Random(seed)
    inst = congruence_instance(rng, size=rng.choice([4, 6]), random_a=seed % 2 == 1)
    assert (inst.M @ PolyMatrix.constant(inst.S0)) == PolyMatrix.constant(inst.S0.T) @ inst.M
    S = skew_congruence_witness(inst.M, inst.A, inst.B)
    assert check_witness(inst.M, inst.A, inst.B, S)
    jd = jordan_form(inst.B_tilde())
    T = PolyMatrix.constant(jd.T)
    assert verify_block_vanishing(T.T @ inst.M @ T, jd.jordan_matrix())


def test_multi_group_instance():
    inst = congruence_instance(random.Random(1), groups=[1, 1, 1])
    assert inst.n_groups() >= 2
    S = skew_congruence_witness(inst.M, inst.A, inst.B)
    assert check_witness(inst.M, inst.A, inst.B, S)


def test_block_vanishing_detects_coupling():
    M = PolyMatrix([[0, "x0"], ["-x0", 0]])
    assert not verify_block_vanishing(M, QMatrix.diag([1, 4]))
    assert verify_block_vanishing(M, QMatrix.diag([4, 4]))


def test_commutant_basis_solves_equation():
    inst = congruence_instance(random.Random(3), size=4)
    for S in _commutant_basis(inst.M):
        Sp = PolyMatrix.constant(S)
        assert inst.M @ Sp == Sp.T @ inst.M
