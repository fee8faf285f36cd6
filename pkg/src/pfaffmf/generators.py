"""Seeded random objects for property checks: forms, skew matrices, GL elements, gammas."""

from __future__ import annotations

import random
from fractions import Fraction

from .mf import GammaElement
from .ring import N_VARS, Poly, QMatrix, monomial_basis
from .skew import PolyMatrix, SkewPolyMatrix, pfaffian


def random_form(rng: random.Random, d: int = 1, n_vars: int = N_VARS, bound: int = 3,
                density: float = 1.0) -> Poly:
    terms = {}
    for m in monomial_basis(n_vars, d):
        if rng.random() <= density:
            c = rng.randint(-bound, bound)
            if c:
                terms[m] = Fraction(c)
    return Poly(terms, n_vars)


def random_skew_linear(rng: random.Random, n: int = 6, n_vars: int = N_VARS, bound: int = 3,
                       density: float = 1.0) -> SkewPolyMatrix:
    z = Poly.zero(n_vars)
    rows = [[z] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            f = random_form(rng, 1, n_vars, bound, density)
            rows[i][j] = f
            rows[j][i] = -f
    return SkewPolyMatrix(rows, n_vars=n_vars)


def random_qmatrix(rng: random.Random, rows: int, cols: int, bound: int = 3) -> QMatrix:
    return QMatrix([[Fraction(rng.randint(-bound, bound)) for _ in range(cols)]
                    for _ in range(rows)])


def random_gl(rng: random.Random, n: int, bound: int = 3) -> QMatrix:
    while True:
        g = random_qmatrix(rng, n, n, bound)
        if g.det():
            return g


def random_linear_matrix(rng: random.Random, rows: int, cols: int, n_vars: int = N_VARS,
                         bound: int = 2) -> PolyMatrix:
    return PolyMatrix([[random_form(rng, 1, n_vars, bound) for _ in range(cols)]
                       for _ in range(rows)], n_vars=n_vars)


def random_gamma(rng: random.Random, n_vars: int = N_VARS, unipotent: bool = False):
    u = random_linear_matrix(rng, 2, 6, n_vars)
    while u.is_zero():
        u = random_linear_matrix(rng, 2, 6, n_vars)
    if unipotent:
        return GammaElement(QMatrix.identity(2), u, QMatrix.identity(6))
    return GammaElement(random_gl(rng, 2), u, random_gl(rng, 6, 2))


def random_nonzero_pfaffian(rng: random.Random, n_vars: int = N_VARS, bound: int = 2):
    while True:
        m = random_skew_linear(rng, 6, n_vars, bound)
        if pfaffian(m).terms:
            return m
