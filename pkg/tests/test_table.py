import pytest

from pfaffmf import (GradedMap, PolyMatrix, all_minors_2x2, graded_kernel, ideal_equal_in_degree,
                     pf_adjoint, pfaffian, span_dimension, table1_pair, variables)
from pfaffmf.ring import rank_of_rows
from pfaffmf.table import (ARITY, STABILITY, TAGS, adjoint_pairing, read_normal_form,
                           table1_matrix)
from pfaffmf.skew import sub_pfaffians


def column_span_equal(s, basis):
    rows_s = [[c for p in s.column(j) for c in p.coeff_vector(1)] for j in range(s.cols)]
    rows_k = [[c for p in v for c in p.coeff_vector(1)] for v in basis.columns]
    return rank_of_rows(rows_s, 30) == rank_of_rows(rows_k, 30) == rank_of_rows(rows_s + rows_k, 30)


@pytest.mark.parametrize("tag", TAGS)
def test_pair_properties(tag):
    M, S = table1_pair(tag)
    assert pfaffian(M).is_zero()
    assert (M @ S).is_zero()
    basis = graded_kernel(GradedMap.uniform(M, 1), 1)
    assert len(basis) == 2 and column_span_equal(S, basis)
    I = PolyMatrix.constant(adjoint_pairing(tag))
    assert pf_adjoint(M) == S @ I @ S.T


@pytest.mark.parametrize("tag", TAGS)
def test_minors_and_sub_pfaffians_agree(tag):
    M, S = table1_pair(tag)
    assert ideal_equal_in_degree(all_minors_2x2(S), sub_pfaffians(M).values(), 2)


@pytest.mark.parametrize("tag", TAGS)
def test_forms_used(tag):
    M = table1_matrix(tag)
    entries = [M[i, j] for i in range(6) for j in range(i + 1, 6) if M[i, j].terms]
    assert span_dimension(entries, 1) == ARITY[tag]


def test_stability_column():
    assert [STABILITY[t] for t in TAGS] == ["stable"] * 3 + [
        "strictly-semistable-not-polystable"] * 2 + ["polystable"]


def test_read_normal_form():
    x = variables()
    forms = [x[0] + x[1], x[1], x[2], x[3] - x[0], x[4]]
    M = table1_matrix("d", forms)
    assert read_normal_form("d", M) == forms
    assert read_normal_form("a", M) is None
    with pytest.raises(ValueError):
        table1_matrix("f", forms)
