"""Recognise the six normal-form classes of Pfaffian-zero skew 6x6 linear matrices.

Classification compares congruence-invariant fingerprints with reference values
computed from the normal forms themselves (frozen below, rechecked by the tests).
"""

from __future__ import annotations

import enum
import random
from dataclasses import asdict, dataclass
from fractions import Fraction

import sympy

from .ring import Poly, QMatrix, rank_of_rows, span_dimension
from .skew import PolyMatrix, pfaffian, require_skew
from .syzygy import all_minors_2x2, hilbert_values, linear_syzygy_matrix
from .table import ARITY, STABILITY

MINOR_DEGREES = (2, 3, 4)


class TableClass(enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"
    F = "f"
    NONZERO_PFAFFIAN = "nonzero_pfaffian"
    UNRECOGNIZED = "unrecognized"

    @property
    def is_table_class(self) -> bool:
        return len(self.value) == 1


class StabilityLabel(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly-semistable-not-polystable"
    POLYSTABLE = "polystable"


@dataclass(frozen=True)
class Fingerprint:
    pf_zero: bool
    syz1_dim: int
    s_entry_span_dim: int
    minor_hilbert: tuple[int, int, int] | None
    split_span_dim: int | None

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.minor_hilbert is not None:
            d["minor_hilbert"] = list(self.minor_hilbert)
        return d


# computed by ``fingerprint`` on the normal forms; tests recompute these
REFERENCE_FINGERPRINTS = {
    TableClass.A: Fingerprint(True, 2, 5, (10, 28, 61), None),
    TableClass.B: Fingerprint(True, 2, 5, (9, 27, 60), 5),
    TableClass.C: Fingerprint(True, 2, 4, (8, 26, 59), 4),
    TableClass.D: Fingerprint(True, 2, 5, (9, 27, 60), None),
    TableClass.E: Fingerprint(True, 2, 4, (8, 26, 59), None),
    TableClass.F: Fingerprint(True, 2, 3, (6, 22, 53), 3),
}


def _coefficient_rows(column) -> list[list[Fraction]]:
    """Rows of linear-form coefficients, one per entry of the column."""
    return [[Fraction(c) for c in p.coeff_vector(1)] for p in column]


def _span_of_column(column) -> int:
    return rank_of_rows(_coefficient_rows(column))


def _pencil_low_points(s: PolyMatrix) -> list | str:
    """Points of the pencil of columns of ``s`` whose entries span <= 3 forms.

    Returns "all" if every point qualifies, else a list of column vectors.
    A point v = s1 + t*s2 qualifies iff its 6 x n coefficient matrix C(t) has
    rank <= 3. Candidates are the rational roots of det(R1 C(t) R2) for fixed
    random R1, R2 (a combination of the 4x4 minors); each is confirmed directly.
    """
    s1, s2 = s.column(0), s.column(1)
    c1, c2 = _coefficient_rows(s1), _coefficient_rows(s2)
    n = len(c1[0])

    def coeff_matrix(t):
        return QMatrix([[a + t * b for a, b in zip(r1, r2)] for r1, r2 in zip(c1, c2)])

    # the minors have degree <= 4 in t, so vanishing at 5 points means identically
    if all(coeff_matrix(t).rank() <= 3 for t in range(5)):
        return "all"
    rng = random.Random(0)
    x = sympy.Symbol("t")
    poly = sympy.Integer(0)
    while poly == 0:
        r1 = QMatrix([[rng.randint(-9, 9) for _ in range(6)] for _ in range(4)])
        r2 = QMatrix([[rng.randint(-9, 9) for _ in range(4)] for _ in range(n)])
        vals = [(t, sympy.Rational(str((r1 @ coeff_matrix(t) @ r2).det()))) for t in range(5)]
        poly = sympy.interpolate(vals, x)
    points = []
    for root in sympy.Poly(poly, x).ground_roots():
        root = Fraction(str(root))
        if coeff_matrix(root).rank() <= 3:
            points.append(tuple(a + root * b for a, b in zip(s1, s2)))
    if _span_of_column(s2) <= 3:
        points.append(tuple(s2))
    return points


def _split_span_dim(s: PolyMatrix) -> int | None:
    pts = _pencil_low_points(s)
    if pts == "all":
        return _span_of_column(list(s.column(0)) + list(s.column(1)))
    if len(pts) != 2:
        return None
    return _span_of_column(list(pts[0]) + list(pts[1]))


def fingerprint(m: PolyMatrix) -> Fingerprint:
    require_skew(m, 6)
    if not m.entries_of_degree(1):
        raise ValueError("expected a skew matrix of linear forms")
    pf_zero = pfaffian(m).is_zero()
    s = linear_syzygy_matrix(m)
    entries = [s[i, j] for i in range(s.rows) for j in range(s.cols)]
    span = span_dimension(entries, 1, m.n_vars) if entries else 0
    minor_hilbert = None
    split = None
    if s.cols == 2:
        minor_hilbert = hilbert_values(all_minors_2x2(s), MINOR_DEGREES, m.n_vars)
        split = _split_span_dim(s)
    return Fingerprint(pf_zero, s.cols, span, minor_hilbert, split)


def classify_table(m: PolyMatrix) -> TableClass:
    require_skew(m, 6)
    if not pfaffian(m).is_zero():
        return TableClass.NONZERO_PFAFFIAN
    fp = fingerprint(m)
    for cls, ref in REFERENCE_FINGERPRINTS.items():
        if fp == ref:
            return cls
    return TableClass.UNRECOGNIZED


def stability_of(cls: TableClass) -> StabilityLabel:
    if not cls.is_table_class:
        raise ValueError(f"no stability label for {cls.value}")
    return StabilityLabel(STABILITY[cls.value])


def curve_ideal_generators(cls: TableClass, forms) -> tuple[list[Poly], ...]:
    """Generator lists of the curve ideals a cubic must lie in, in normal-form coordinates.

    Classes b and c return two lists; membership is required in both.
    """
    if not cls.is_table_class:
        raise ValueError(f"no curve ideal for {cls.value}")
    forms = list(forms)
    if len(forms) != ARITY[cls.value]:
        raise ValueError(f"class {cls.value} needs {ARITY[cls.value]} forms, got {len(forms)}")
    l = forms + [None] * (5 - len(forms))
    l0, l1, l2, l3, l4 = l
    if cls is TableClass.A:
        return ([l1, l2, l3 * l4 - l0 * l0],)
    if cls is TableClass.B:
        return ([l0, l1, l2], [l2, l3, l4])
    if cls is TableClass.C:
        return ([l0, l1, l2], [l1, l2, l3])
    if cls is TableClass.D:
        return ([l2, l0 * l4 - l1 * l3, l1 * l1, l0 * l1, l0 * l0],)
    if cls is TableClass.E:
        return ([l1, l2, l0 * l0],)
    return ([l0, l1, l2],)


def classification_report(m: PolyMatrix) -> dict:
    cls = classify_table(m)
    report = {"class": cls.value,
              "stability": stability_of(cls).value if cls.is_table_class else None}
    if cls is not TableClass.NONZERO_PFAFFIAN:
        report["fingerprint"] = fingerprint(m).to_dict()
    return report
