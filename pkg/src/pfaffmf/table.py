"""The six normal forms (M, S) of semistable skew 6x6 linear matrices with Pf(M) = 0.

Each class is built from independent linear forms l0, ..., l4 (defaults x0..x4;
classes c and e use four forms, f uses three). ``M`` is the skew matrix, ``S``
the 6x2 matrix whose columns generate its linear syzygies.
"""

from __future__ import annotations

from .ring import N_VARS, Poly, span_dimension, variables
from .skew import PolyMatrix, SkewPolyMatrix, standard_symplectic

TAGS = ("a", "b", "c", "d", "e", "f")

ARITY = {"a": 5, "b": 5, "c": 4, "d": 5, "e": 4, "f": 3}

STABILITY = {
    "a": "stable",
    "b": "stable",
    "c": "stable",
    "d": "strictly-semistable-not-polystable",
    "e": "strictly-semistable-not-polystable",
    "f": "polystable",
}

DESCRIPTION = {
    "a": "a smooth conic",
    "b": "two skew lines",
    "c": "two intersecting lines with an embedded point spanning P4",
    "d": "a double line on a smooth quadric surface",
    "e": "a plane double line with an embedded point spanning P4",
    "f": "a line with its full first order infinitesimal neighbourhood",
}

# sign of I in adj(M) = S I S^t, with I = sign * [[0, 1], [-1, 0]]
ADJOINT_SIGN = {"a": 1, "b": -1, "c": -1, "d": 1, "e": 1, "f": 1}


def _forms(tag: str, forms, n_vars: int) -> list[Poly]:
    if forms is None:
        forms = variables(n_vars)[: ARITY[tag]]
    forms = list(forms)
    if len(forms) != ARITY[tag]:
        raise ValueError(f"class {tag} needs {ARITY[tag]} linear forms, got {len(forms)}")
    return forms + [Poly.zero(forms[0].n_vars)] * (5 - len(forms))


def _skew_from_upper(upper: dict, n_vars: int) -> SkewPolyMatrix:
    z = Poly.zero(n_vars)
    rows = [[z] * 6 for _ in range(6)]
    for (i, j), v in upper.items():
        rows[i][j] = v
        rows[j][i] = -v
    return SkewPolyMatrix(rows, n_vars=n_vars)


def _matrix_entries(tag: str, l: list[Poly]) -> dict:
    l0, l1, l2, l3, l4 = l
    # the 3x3 block [[0, l0, l1], [-l0, 0, l2], [-l1, -l2, 0]]
    core = {(0, 1): l0, (0, 2): l1, (1, 2): l2}
    if tag == "a":
        return {(0, 1): l3, (0, 4): l0, (0, 5): l1, (1, 3): -l0, (1, 5): l2,
                (2, 3): -l1, (2, 4): -l2, (3, 4): l4}
    if tag in ("b", "c"):
        second = ({(3, 4): l2, (3, 5): l3, (4, 5): l4} if tag == "b"
                  else {(3, 4): l1, (3, 5): l2, (4, 5): l3})
        return {**core, **second}
    # d, e, f: [[0, N], [N, D]] with N the core block
    upper = {(0, 4): l0, (0, 5): l1, (1, 3): -l0, (1, 5): l2, (2, 3): -l1, (2, 4): -l2}
    if tag == "d":
        upper.update({(3, 4): l3, (3, 5): l4})
    elif tag == "e":
        upper[(3, 4)] = l3
    return upper


def table1_matrix(tag: str, forms=None, n_vars: int = N_VARS) -> SkewPolyMatrix:
    l = _forms(tag, forms, n_vars)
    return _skew_from_upper(_matrix_entries(tag, l), l[0].n_vars)


def table1_syzygy(tag: str, forms=None, n_vars: int = N_VARS) -> PolyMatrix:
    l0, l1, l2, l3, l4 = _forms(tag, forms, n_vars)
    z = Poly.zero(l0.n_vars)
    first = [l2, -l1, l0, z, z, z]
    second = {
        "a": [z, z, l4, l2, -l1, l0],
        "b": [z, z, z, l4, -l3, l2],
        "c": [z, z, z, l3, -l2, l1],
        "d": [z, -l4, l3, l2, -l1, l0],
        "e": [z, z, l3, l2, -l1, l0],
        "f": [z, z, z, l2, -l1, l0],
    }[tag]
    if tag == "a":
        first = [l2, -l1, l0, z, z, l3]
    return PolyMatrix([[a, b] for a, b in zip(first, second)], n_vars=l0.n_vars)


def table1_pair(tag: str, forms=None, n_vars: int = N_VARS):
    return table1_matrix(tag, forms, n_vars), table1_syzygy(tag, forms, n_vars)


def adjoint_pairing(tag: str):
    """The 2x2 matrix I with adj(M) = S I S^t."""
    return standard_symplectic(2, ADJOINT_SIGN[tag])


# positions of l0..l4 inside M (upper triangle), used to read forms back out
_FORM_POSITIONS = {
    "a": [(0, 4), (0, 5), (1, 5), (0, 1), (3, 4)],
    "b": [(0, 1), (0, 2), (1, 2), (3, 5), (4, 5)],
    "c": [(0, 1), (0, 2), (1, 2), (4, 5)],
    "d": [(0, 4), (0, 5), (1, 5), (3, 4), (3, 5)],
    "e": [(0, 4), (0, 5), (1, 5), (3, 4)],
    "f": [(0, 4), (0, 5), (1, 5)],
}


def read_normal_form(tag: str, m: PolyMatrix) -> list[Poly] | None:
    """The forms l_i if ``m`` is literally the class-``tag`` normal form in independent forms."""
    forms = [m[i, j] for i, j in _FORM_POSITIONS[tag]]
    if not all(f.is_homogeneous(1) and f.terms for f in forms):
        return None
    if span_dimension(forms, 1) != len(forms):
        return None
    if table1_matrix(tag, forms) != m:
        return None
    return forms
