import pytest
from hypothesis import given, settings

from pfaffmf import (GradedMap, Poly, PolyMatrix, all_minors_2x2, graded_kernel, ideal_contains,
                     ideal_equal_in_degree, linear_syzygy_matrix, parse_poly, variables)
from pfaffmf.ring import HomogeneityError, monomial_basis, rank_of_rows
from pfaffmf.skew import GradingError, ShapeError
from pfaffmf.syzygy import hilbert_values, ideal_piece

from conftest import case_e_generators, degree_two_span, forms, skew_linear


def flat(vec, d):
    return [c for p in vec for c in p.coeff_vector(d)]


def span_rank(vectors, d, length):
    return rank_of_rows([flat(v, d) for v in vectors], length * len(monomial_basis(5, d)))


def row(*texts):
    return PolyMatrix([[parse_poly(t) for t in texts]])


def test_koszul_syzygy():
    basis = graded_kernel(GradedMap.uniform(row("x0", "x1"), 1), 1)
    assert len(basis) == 1
    a, b = basis.columns[0]
    assert b * Poly.var(1) == -(a * Poly.var(0)) and a.ratio_to(-Poly.var(1)) is not None


def test_no_syzygies_in_degree_zero():
    assert len(graded_kernel(GradedMap.uniform(row("x0", "x1", "x2"), 1), 0)) == 0


def test_case_e_row_matches_generator_matrix():
    m = row("0", "0", "x3", "x2", "-x1", "x0")
    basis = graded_kernel(GradedMap.uniform(m, 1), 2)
    oracle = degree_two_span(case_e_generators())
    assert len(basis) == 56
    assert span_rank(oracle, 2, 6) == 56
    assert span_rank(list(basis.columns) + oracle, 2, 6) == 56
    for v in oracle:
        assert (m @ PolyMatrix([[p] for p in v])).is_zero()


@given(skew_linear())
@settings(max_examples=10, deadline=None)
def test_kernel_vectors_are_syzygies(m):
    basis = graded_kernel(GradedMap.uniform(m, 1), 1)
    if len(basis):
        assert (m @ basis.as_matrix()).is_zero()


def test_mixed_twists():
    x = variables()
    m = PolyMatrix([[x[0], x[1] * x[1]]])
    gm = GradedMap(m, (-1, -2), (0,))
    basis = graded_kernel(gm, 2)
    # component degrees are d + s_j - max(s): 2 and 1
    assert len(basis) == 1
    a, b = basis.columns[0]
    assert a.degree == 2 and b.degree == 1
    with pytest.raises(GradingError):
        GradedMap(m, (-1, -1), (0,))
    with pytest.raises(GradingError):
        GradedMap(m, (-1,), (0,))


def test_linear_syzygy_matrix_rejects_non_linear():
    with pytest.raises(GradingError):
        linear_syzygy_matrix(PolyMatrix([[0, "x0^2"], ["-x0^2", 0]]))


def test_ideal_membership_basics():
    x = variables()
    gens = [x[0], x[1] * x[2]]
    assert ideal_contains(x[0] * x[4] + x[1] * x[2] * 3, gens)
    assert not ideal_contains(x[1] * x[1], gens)
    assert ideal_contains(Poly.zero(), gens)
    assert not ideal_contains(x[0], [])
    with pytest.raises(HomogeneityError):
        ideal_contains(x[0] + x[1] * x[1], gens)


@given(forms(1), forms(1), forms(2))
@settings(max_examples=30, deadline=None)
def test_combinations_are_members(a, b, q):
    x = variables()
    gens = [x[0] * x[1], x[2] * x[2] - x[3] * x[4]]
    f = gens[0] * q + gens[1] * q
    assert ideal_contains(f, gens)
    assert ideal_contains(gens[0] * a + gens[1] * b, gens)


def test_hilbert_values_of_variables():
    x = variables()
    # (x0): dim of degree-d piece is the number of degree d-1 monomials
    assert hilbert_values([x[0]], (1, 2, 3)) == (1, 5, 15)
    # (x0, x1): complement is k[x2, x3, x4]
    assert hilbert_values([x[0], x[1]], (1, 2, 3)) == (2, 15 - 6, 35 - 10)
    assert ideal_piece([], 2, 5) == []


def test_ideal_equality_in_degree():
    x = variables()
    a = [x[0] * x[1], x[0] * x[2]]
    b = [x[0] * (x[1] + x[2]), x[0] * x[2]]
    assert ideal_equal_in_degree(a, b, 2)
    assert not ideal_equal_in_degree(a, [x[0] * x[1]], 2)


def test_minors():
    s = PolyMatrix([["x0", "x1"], ["x2", "x3"], ["x4", "0"]])
    minors = all_minors_2x2(s)
    assert minors[0] == parse_poly("x0*x3 - x1*x2")
    assert len(minors) == 3
    with pytest.raises(ShapeError):
        all_minors_2x2(PolyMatrix([["x0", "x1", "x2"]]))
