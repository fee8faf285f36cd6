"""Explicit sample triples used for shipped instances and tests.

The case-(B) family below is a hand-made example for classes d, e, f only;
it is not a general construction of factorizations with B0 = 0.
"""

from __future__ import annotations

from .mf import MFTriple
from .ring import N_VARS, Poly, variables
from .skew import PolyMatrix
from .table import table1_pair

CASE_B_TAGS = ("d", "e", "f")


def case_b_triple(tag: str, t: Poly | None = None, n_vars: int = N_VARS) -> MFTriple:
    """A verified triple with A1 = M, B1 = S of class d, e or f and F = -t(l0^2 + l1^2 + l2^2).

    With M = [[0, N], [N, D]] (N the 3x3 block in l0, l1, l2), n = (l2, -l1, l0)
    and w the top half of the second column of S:
    A3 = 0, A2 = [[t n, -t w], [0, t n]], B0 = 0, B2 = [[-t D, t N], [t N, 0]].
    """
    if tag not in CASE_B_TAGS:
        raise ValueError(f"no sample case-(B) triple for class {tag}")
    M, S = table1_pair(tag, n_vars=n_vars)
    x = variables(n_vars)
    if t is None:
        t = x[3]
    l0, l1, l2 = x[:3]
    z = Poly.zero(n_vars)
    n = [l2, -l1, l0]
    w = [S[i, 1] for i in range(3)]
    N = M.submatrix(range(3), range(3, 6))
    D = M.submatrix(range(3, 6), range(3, 6))
    A2 = PolyMatrix([[t * a for a in n] + [-t * a for a in w],
                     [z, z, z] + [t * a for a in n]], n_vars=n_vars)
    B2 = PolyMatrix.block([[-(D * t), N * t], [N * t, PolyMatrix.zeros(3, 3, n_vars)]])
    F = -t * (l0 * l0 + l1 * l1 + l2 * l2)
    return MFTriple(PolyMatrix.zeros(2, 2, n_vars), A2, M, PolyMatrix.zeros(2, 2, n_vars), S, B2, F)


def block_diagonal_matrix(n_vars: int = N_VARS) -> PolyMatrix:
    """diag(x0 J, x1 J, x2 J) with Pfaffian x0*x1*x2."""
    x = variables(n_vars)
    z = Poly.zero(n_vars)
    rows = [[z] * 6 for _ in range(6)]
    for k in range(3):
        rows[2 * k][2 * k + 1] = x[k]
        rows[2 * k + 1][2 * k] = -x[k]
    return PolyMatrix(rows, n_vars=n_vars)
