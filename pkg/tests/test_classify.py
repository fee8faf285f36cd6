import random

import pytest

from pfaffmf import (PolyMatrix, StabilityLabel, TableClass, all_minors_2x2, classify_table,
                     congruence_transform, curve_ideal_generators, fingerprint, ideal_contains,
                     span_dimension, stability_of, table1_pair, variables)
from pfaffmf.classify import REFERENCE_FINGERPRINTS, classification_report
from pfaffmf.generators import random_gl, random_nonzero_pfaffian
from pfaffmf.ring import Poly
from pfaffmf.samples import block_diagonal_matrix
from pfaffmf.table import ARITY, STABILITY, TAGS, table1_matrix


def random_forms(rng, k):
    """k linearly independent linear forms."""
    while True:
        forms = [Poly({tuple(int(i == j) for i in range(5)): rng.randint(-2, 2) for j in range(5)})
                 for _ in range(k)]
        if span_dimension(forms, 1) == k:
            return forms


@pytest.mark.parametrize("tag", TAGS)
def test_reference_fingerprints_recompute(tag):
    assert fingerprint(table1_matrix(tag)) == REFERENCE_FINGERPRINTS[TableClass(tag)]


def test_reference_fingerprints_distinct():
    values = list(REFERENCE_FINGERPRINTS.values())
    assert len(set(values)) == len(values)


@pytest.mark.parametrize("tag", TAGS)
def test_minor_hilbert_degree_two_is_minor_span(tag):
    M, S = table1_pair(tag)
    assert span_dimension(all_minors_2x2(S), 2) == fingerprint(M).minor_hilbert[0]


@pytest.mark.parametrize("tag", TAGS)
def test_invariance_under_congruence_and_forms(tag):
    rng = random.Random(TAGS.index(tag))
    for _ in range(4):
        m = table1_matrix(tag, random_forms(rng, ARITY[tag]))
        g = random_gl(rng, 6)
        assert classify_table(congruence_transform(m, g)) is TableClass(tag)


def test_nonzero_pfaffian():
    rng = random.Random(3)
    m = random_nonzero_pfaffian(rng)
    assert classify_table(m) is TableClass.NONZERO_PFAFFIAN
    assert "fingerprint" not in classification_report(m)
    assert classify_table(block_diagonal_matrix()) is TableClass.NONZERO_PFAFFIAN


def test_unrecognized_degenerate_matrix():
    x = variables()
    z = Poly.zero()
    rows = [[z] * 6 for _ in range(6)]
    rows[0][1], rows[1][0] = x[0], -x[0]
    rows[2][3], rows[3][2] = x[1], -x[1]
    m = PolyMatrix(rows)
    assert classify_table(m) is TableClass.UNRECOGNIZED
    assert classification_report(m)["stability"] is None
    with pytest.raises(ValueError):
        stability_of(TableClass.UNRECOGNIZED)


def test_stability_labels():
    for tag in TAGS:
        assert stability_of(TableClass(tag)) is StabilityLabel(STABILITY[tag])


def test_report_shape():
    rep = classification_report(table1_matrix("f"))
    assert rep["class"] == "f" and rep["stability"] == "polystable"
    assert rep["fingerprint"]["minor_hilbert"] == [6, 22, 53]


@pytest.mark.parametrize("tag", TAGS)
def test_curve_ideals_contain_minors(tag):
    # each curve lies in the rank-<=2 locus cut out by the sub-Pfaffians / minors
    M, S = table1_pair(tag)
    forms = variables()[: ARITY[tag]]
    for gens in curve_ideal_generators(TableClass(tag), forms):
        for q in all_minors_2x2(S):
            assert ideal_contains(q, gens)


def test_curve_ideal_errors():
    with pytest.raises(ValueError):
        curve_ideal_generators(TableClass.F, variables())
    with pytest.raises(ValueError):
        curve_ideal_generators(TableClass.NONZERO_PFAFFIAN, variables())
