"""Graded syzygies, bounded-degree ideal membership and ideal comparison.

Everything here reduces to linear algebra on one graded piece at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ring import (HomogeneityError, Poly, echelon_basis, kernel_of_rows, monomial_basis,
                   monomial_index, rank_of_rows)
from .skew import GradingError, PolyMatrix, ShapeError, require_skew


@dataclass(frozen=True)
class GradedMap:
    """A map of graded free modules  ⊕ R(s_j) -> ⊕ R(t_i).

    Entry (i, j) must be zero or homogeneous of degree ``t_i - s_j``; the
    skew matrices M of linear forms are maps R(-1)^6 -> R^6.
    """

    matrix: PolyMatrix
    source_twists: tuple[int, ...]
    target_twists: tuple[int, ...]

    def __post_init__(self):
        m = self.matrix
        object.__setattr__(self, "source_twists", tuple(self.source_twists))
        object.__setattr__(self, "target_twists", tuple(self.target_twists))
        if len(self.source_twists) != m.cols or len(self.target_twists) != m.rows:
            raise GradingError("twist vectors do not match the matrix shape")
        for i in range(m.rows):
            for j in range(m.cols):
                d = self.target_twists[i] - self.source_twists[j]
                if not m[i, j].is_homogeneous(d):
                    raise GradingError(f"entry ({i},{j}) = {m[i, j]} is not of degree {d}")

    @classmethod
    def uniform(cls, matrix: PolyMatrix, degree: int = 1) -> GradedMap:
        """All entries of one degree: R(-degree)^cols -> R^rows."""
        return cls(matrix, (-degree,) * matrix.cols, (0,) * matrix.rows)


@dataclass(frozen=True)
class SyzygyBasis:
    degree: int
    columns: tuple[tuple[Poly, ...], ...]
    length: int
    n_vars: int

    def __len__(self):
        return len(self.columns)

    def as_matrix(self) -> PolyMatrix:
        """The syzygies as the columns of a (length x k) matrix."""
        rows = [[c[i] for c in self.columns] for i in range(self.length)]
        return PolyMatrix(rows, n_vars=self.n_vars, rows=self.length, cols=len(self.columns))


def _entry_degrees(gmap: GradedMap, d: int) -> list[int]:
    top = max(gmap.source_twists)
    return [d + s - top for s in gmap.source_twists]


def graded_kernel(gmap: GradedMap, d: int) -> SyzygyBasis:
    """Basis of the degree-``d`` syzygies of ``gmap``.

    A degree-d syzygy is a column vector v with matrix @ v = 0 whose component
    j is homogeneous of degree ``d + s_j - max(s)``; with uniform twists every
    component has degree d.
    """
    m = gmap.matrix
    n = m.n_vars
    degs = _entry_degrees(gmap, d)
    shift = d - max(gmap.source_twists)
    # columns of the coefficient matrix: (source component j, monomial of degree degs[j])
    col_keys = [(j, mono) for j in range(m.cols) if degs[j] >= 0
                for mono in monomial_basis(n, degs[j])]
    row_offset = {}
    nrows = 0
    for i in range(m.rows):
        e = shift + gmap.target_twists[i]
        row_offset[i] = (nrows, e)
        nrows += len(monomial_basis(n, e)) if e >= 0 else 0
    # build the transposed coefficient matrix column by column
    columns = []
    for j, mono in col_keys:
        col = {}
        for i in range(m.rows):
            off, e = row_offset[i]
            if e < 0:
                continue
            idx = monomial_index(n, e)
            for a, c in m[i, j].terms.items():
                key = off + idx[tuple(x + y for x, y in zip(a, mono))]
                col[key] = col.get(key, 0) + c
        columns.append(col)
    rows = [[Fraction(0)] * len(col_keys) for _ in range(nrows)]
    for k, col in enumerate(columns):
        for r, c in col.items():
            rows[r][k] = c
    kernel = kernel_of_rows(rows, len(col_keys)) if col_keys else []
    out = []
    for v in kernel:
        comps = [dict() for _ in range(m.cols)]
        for (j, mono), c in zip(col_keys, v):
            if c:
                comps[j][mono] = c
        out.append(tuple(Poly(t, n) for t in comps))
    return SyzygyBasis(d, tuple(out), m.cols, n)


def linear_syzygy_matrix(m: PolyMatrix) -> PolyMatrix:
    """Columns form a basis of the linear syzygies of a skew matrix of linear forms."""
    require_skew(m)
    if not m.entries_of_degree(1):
        raise GradingError("expected a matrix of linear forms")
    return graded_kernel(GradedMap.uniform(m, 1), 1).as_matrix()


# ---------------------------------------------------------------------------
# ideals in a single degree


def _require_homogeneous(polys):
    for p in polys:
        if not p.is_homogeneous():
            raise HomogeneityError(f"{p} is not homogeneous")


def ideal_piece(gens, d: int, n_vars: int | None = None) -> list[list[int]]:
    """Echelon basis (integer coefficient rows) of the degree-``d`` piece of (gens).

    Built upward one degree at a time: I_e = x * I_{e-1} + span(gens of degree e).
    """
    gens = [g for g in gens if g.terms]
    _require_homogeneous(gens)
    if n_vars is None:
        if not gens:
            return []
        n_vars = gens[0].n_vars
    gens = [g for g in gens if g.degree <= d]
    if not gens:
        return []
    start = min(g.degree for g in gens)
    basis: list[Poly] = []
    for e in range(start, d + 1):
        cand = [g for g in gens if g.degree == e]
        for p in basis:
            for i in range(n_vars):
                cand.append(p * Poly.var(i, n_vars))
        rows = echelon_basis([p.coeff_vector(e) for p in cand], len(monomial_basis(n_vars, e)))
        if e == d:
            return rows
        basis = [Poly.from_coeff_vector([Fraction(x) for x in r], e, n_vars) for r in rows]
    return []


def ideal_contains(f: Poly, gens) -> bool:
    """Whether the homogeneous ``f`` lies in the ideal generated by homogeneous ``gens``."""
    gens = list(gens)
    _require_homogeneous([f] + gens)
    if not f.terms:
        return True
    d = f.degree
    piece = ideal_piece(gens, d, f.n_vars)
    ncols = len(monomial_basis(f.n_vars, d))
    return rank_of_rows(piece + [f.coeff_vector(d)], ncols) == len(piece)


def ideal_equal_in_degree(gens_a, gens_b, d: int) -> bool:
    """Whether (gens_a) and (gens_b) have the same degree-``d`` piece."""
    gens_a, gens_b = list(gens_a), list(gens_b)
    _require_homogeneous(gens_a + gens_b)
    everything = [g for g in gens_a + gens_b if g.terms]
    if not everything:
        return True
    n = everything[0].n_vars
    pa = ideal_piece(gens_a, d, n)
    pb = ideal_piece(gens_b, d, n)
    if len(pa) != len(pb):
        return False
    return rank_of_rows(pa + pb, len(monomial_basis(n, d))) == len(pa)


def hilbert_values(gens, degrees, n_vars: int | None = None) -> tuple[int, ...]:
    """Dimensions of the ideal's graded pieces in the given degrees."""
    return tuple(len(ideal_piece(gens, d, n_vars)) for d in degrees)


def all_minors_2x2(s: PolyMatrix) -> list[Poly]:
    """All 2x2 minors of a k x 2 matrix, row pairs in lexicographic order."""
    if s.cols != 2 or s.rows < 2:
        raise ShapeError(f"expected a k x 2 matrix, got {s.rows}x{s.cols}")
    return [s[i, 0] * s[j, 1] - s[i, 1] * s[j, 0]
            for i in range(s.rows) for j in range(i + 1, s.rows)]
