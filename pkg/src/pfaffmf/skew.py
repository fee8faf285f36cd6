"""Polynomial matrices, skew-symmetric ones, and their Pfaffian algebra."""

from __future__ import annotations

from fractions import Fraction

from .ring import N_VARS, Poly, QMatrix, parse_poly


class NotSkewError(ValueError):
    pass


class ShapeError(ValueError):
    pass


class GradingError(ValueError):
    pass


def _as_poly(x, n_vars: int) -> Poly:
    if isinstance(x, Poly):
        if x.n_vars != n_vars:
            raise ValueError("entry has the wrong number of variables")
        return x
    if isinstance(x, str):
        return parse_poly(x, n_vars)
    return Poly.const(x, n_vars)


class PolyMatrix:
    """Matrix of polynomials with an optional grading.

    ``grading`` is a pair (source, target) of integer vectors; when set,
    entry (i, j) must be zero or homogeneous of degree ``source[j] - target[i]``.
    """

    __slots__ = ("rows", "cols", "entries", "grading", "n_vars")

    def __init__(self, entries, grading=None, n_vars: int = N_VARS, rows: int | None = None,
                 cols: int | None = None):
        data = tuple(tuple(_as_poly(x, n_vars) for x in r) for r in entries)
        self.rows = len(data) if rows is None else rows
        self.cols = (len(data[0]) if data else 0) if cols is None else cols
        if len(data) != self.rows or any(len(r) != self.cols for r in data):
            raise ShapeError("ragged or mis-sized matrix entries")
        self.entries = data
        self.n_vars = n_vars
        self.grading = None
        if grading is not None:
            source, target = (tuple(int(v) for v in g) for g in grading)
            if len(source) != self.cols or len(target) != self.rows:
                raise GradingError("grading vectors do not match the matrix shape")
            for i in range(self.rows):
                for j in range(self.cols):
                    if not data[i][j].is_homogeneous(source[j] - target[i]):
                        raise GradingError(
                            f"entry ({i},{j}) = {data[i][j]} is not of degree {source[j] - target[i]}")
            self.grading = (source, target)

    @classmethod
    def _raw(cls, data, n_vars, rows, cols):
        m = object.__new__(cls)
        m.entries = data
        m.n_vars = n_vars
        m.rows = rows
        m.cols = cols
        m.grading = None
        return m

    # constructors

    @classmethod
    def zeros(cls, rows: int, cols: int, n_vars: int = N_VARS) -> PolyMatrix:
        z = Poly.zero(n_vars)
        return cls._raw(tuple((z,) * cols for _ in range(rows)), n_vars, rows, cols)

    @classmethod
    def identity(cls, n: int, n_vars: int = N_VARS) -> PolyMatrix:
        one, z = Poly.const(1, n_vars), Poly.zero(n_vars)
        return cls._raw(tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)),
                        n_vars, n, n)

    @classmethod
    def constant(cls, mat, n_vars: int = N_VARS) -> PolyMatrix:
        """Lift a QMatrix (or nested numbers) to a matrix of constant polynomials."""
        if isinstance(mat, QMatrix):
            rows, cols, mat = mat.rows, mat.cols, mat.entries
        else:
            rows, cols = len(mat), len(mat[0]) if mat else 0
        data = tuple(tuple(Poly.const(x, n_vars) for x in r) for r in mat)
        return cls._raw(data, n_vars, rows, cols)

    @classmethod
    def block(cls, blocks) -> PolyMatrix:
        """Assemble from a 2-D list of blocks (row heights and column widths must agree)."""
        rows = []
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ShapeError("blocks in one block row have different heights")
            for i in range(height):
                rows.append(tuple(x for b in brow for x in b.entries[i]))
        n_vars = blocks[0][0].n_vars
        ncols = sum(b.cols for b in blocks[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("block columns have inconsistent widths")
        return cls._raw(tuple(rows), n_vars, len(rows), ncols)

    # access

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(r[j] for r in self.entries)

    def submatrix(self, rows, cols) -> PolyMatrix:
        rows, cols = list(rows), list(cols)
        return PolyMatrix._raw(tuple(tuple(self.entries[i][j] for j in cols) for i in rows),
                               self.n_vars, len(rows), len(cols))

    def with_grading(self, source, target) -> PolyMatrix:
        return PolyMatrix(self.entries, grading=(source, target), n_vars=self.n_vars,
                          rows=self.rows, cols=self.cols)

    # algebra

    def transpose(self) -> PolyMatrix:
        data = tuple(zip(*self.entries)) if self.rows else ()
        return PolyMatrix._raw(data if self.rows else tuple(() for _ in range(self.cols)),
                               self.n_vars, self.cols, self.rows)

    @property
    def T(self) -> PolyMatrix:
        return self.transpose()

    def __matmul__(self, other) -> PolyMatrix:
        if isinstance(other, QMatrix):
            other = PolyMatrix.constant(other, self.n_vars)
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = Poly.zero(self.n_vars)
        cols = other.transpose().entries
        data = []
        for r in self.entries:
            out = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a.terms and b.terms:
                        acc = acc + a * b
                out.append(acc)
            data.append(tuple(out))
        return PolyMatrix._raw(tuple(data), self.n_vars, self.rows, other.cols)

    def __rmatmul__(self, other) -> PolyMatrix:
        if isinstance(other, QMatrix):
            return PolyMatrix.constant(other, self.n_vars) @ self
        return NotImplemented

    def _zip(self, other, op) -> PolyMatrix:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")
        return PolyMatrix._raw(tuple(tuple(op(a, b) for a, b in zip(r, s))
                                     for r, s in zip(self.entries, other.entries)),
                               self.n_vars, self.rows, self.cols)

    def __add__(self, other) -> PolyMatrix:
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other) -> PolyMatrix:
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> PolyMatrix:
        return self.map(lambda a: -a)

    def __mul__(self, c) -> PolyMatrix:
        if isinstance(c, PolyMatrix):
            return NotImplemented
        return self.map(lambda a: a * c)

    __rmul__ = __mul__

    def map(self, fn) -> PolyMatrix:
        return PolyMatrix._raw(tuple(tuple(fn(a) for a in r) for r in self.entries),
                               self.n_vars, self.rows, self.cols)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    # predicates

    def is_zero(self) -> bool:
        return not any(a.terms for r in self.entries for a in r)

    def is_skew(self) -> bool:
        if self.rows != self.cols:
            return False
        e = self.entries
        return all(not e[i][i].terms for i in range(self.rows)) and all(
            e[j][i] == -e[i][j] for i in range(self.rows) for j in range(i + 1, self.rows))

    def is_constant(self) -> bool:
        return all(a.is_constant() for r in self.entries for a in r)

    def entries_of_degree(self, d: int) -> bool:
        return all(a.is_homogeneous(d) for r in self.entries for a in r)

    def to_qmatrix(self) -> QMatrix:
        if not self.is_constant():
            raise ValueError("matrix has non-constant entries")
        return QMatrix([[a.constant_value() for a in r] for r in self.entries],
                       self.rows, self.cols)

    def proportionality(self, other: PolyMatrix):
        """The scalar c with ``self == c * other`` (other nonzero), or None."""
        if self.shape != other.shape:
            return None
        i, j = next(((i, j) for i in range(other.rows) for j in range(other.cols)
                     if other.entries[i][j].terms), (None, None))
        if i is None:
            raise ZeroDivisionError("proportionality to the zero matrix")
        c = self.entries[i][j].ratio_to(other.entries[i][j])
        if c is None:
            return None
        return c if self == other * c else None

    # text

    def to_strings(self) -> list[list[str]]:
        return [[str(a) for a in r] for r in self.entries]

    @classmethod
    def from_strings(cls, rows, n_vars: int = N_VARS, grading=None) -> PolyMatrix:
        return cls(rows, grading=grading, n_vars=n_vars)

    def __repr__(self):
        return f"PolyMatrix({self.to_strings()})"


class SkewPolyMatrix(PolyMatrix):
    """A PolyMatrix checked to be skew-symmetric of even size."""

    __slots__ = ()

    def __init__(self, entries, grading=None, n_vars: int = N_VARS, rows=None, cols=None):
        super().__init__(entries, grading=grading, n_vars=n_vars, rows=rows, cols=cols)
        require_skew(self)

    @classmethod
    def of(cls, m: PolyMatrix) -> SkewPolyMatrix:
        if isinstance(m, SkewPolyMatrix):
            return m
        require_skew(m)
        s = cls._raw(m.entries, m.n_vars, m.rows, m.cols)
        s.grading = m.grading
        return s


def require_skew(m: PolyMatrix, size: int | None = None):
    if m.rows != m.cols:
        raise ShapeError(f"expected a square matrix, got {m.rows}x{m.cols}")
    if size is not None and m.rows != size:
        raise ShapeError(f"expected a {size}x{size} matrix, got {m.rows}x{m.cols}")
    if m.rows % 2:
        raise ShapeError(f"skew matrix of odd size {m.rows}")
    if not m.is_skew():
        raise NotSkewError("matrix is not skew-symmetric")


def _pfaffian_unchecked(m: PolyMatrix, idx: tuple[int, ...] | None = None) -> Poly:
    e = m.entries
    memo: dict[tuple[int, ...], Poly] = {(): Poly.const(1, m.n_vars)}

    def pf(ix):
        if ix in memo:
            return memo[ix]
        i0 = ix[0]
        total = Poly.zero(m.n_vars)
        for p in range(1, len(ix)):
            a = e[i0][ix[p]]
            if not a.terms:
                continue
            term = a * pf(ix[1:p] + ix[p + 1:])
            total = total + term if p % 2 else total - term
        memo[ix] = total
        return total

    return pf(tuple(range(m.rows)) if idx is None else idx)


def pfaffian(m: PolyMatrix) -> Poly:
    """Pfaffian by first-row expansion, Pf(empty) = 1; satisfies Pf(M)^2 = det(M)."""
    require_skew(m)
    return _pfaffian_unchecked(m)


def sub_pfaffians(m: PolyMatrix) -> dict[tuple[int, int], Poly]:
    """Pfaffians of the 4x4 matrices left after deleting rows/columns i and j (0-based, i < j)."""
    require_skew(m, 6)
    out = {}
    for i in range(6):
        for j in range(i + 1, 6):
            rest = tuple(k for k in range(6) if k not in (i, j))
            out[(i, j)] = _pfaffian_unchecked(m, rest)
    return out


def pf_adjoint(m: PolyMatrix) -> SkewPolyMatrix:
    """Pfaffian adjoint of a 6x6 skew matrix: entry (i,j), i<j, is (-1)^(i+j) Pf(M_ij)."""
    subs = sub_pfaffians(m)
    z = Poly.zero(m.n_vars)
    rows = [[z] * 6 for _ in range(6)]
    for (i, j), p in subs.items():
        v = p if (i + j) % 2 == 0 else -p
        rows[i][j] = v
        rows[j][i] = -v
    return SkewPolyMatrix.of(PolyMatrix._raw(tuple(map(tuple, rows)), m.n_vars, 6, 6))


def congruence_transform(m: PolyMatrix, g) -> SkewPolyMatrix:
    """g^t M g."""
    require_skew(m)
    if isinstance(g, QMatrix):
        g = PolyMatrix.constant(g, m.n_vars)
    if g.shape != m.shape:
        raise ShapeError(f"transform of shape {g.shape} for a matrix of shape {m.shape}")
    return SkewPolyMatrix.of(g.T @ m @ g)


def verify_adjoint_identity(m: PolyMatrix) -> bool:
    """True iff M adj(M) = adj(M) M = Pf(M) Id exactly."""
    adj = pf_adjoint(m)
    target = PolyMatrix.identity(6, m.n_vars) * pfaffian(m)
    return m @ adj == target and adj @ m == target


def determinant(m: PolyMatrix) -> Poly:
    """Determinant by memoised cofactor expansion along rows."""
    if m.rows != m.cols:
        raise ShapeError("determinant of a non-square matrix")
    n = m.rows
    e = m.entries
    memo: dict[int, Poly] = {}

    def det(row: int, mask: int) -> Poly:
        # minor on rows row.. and the columns whose bit is set in mask
        if row == n:
            return Poly.const(1, m.n_vars)
        if mask in memo:
            return memo[mask]
        total = Poly.zero(m.n_vars)
        sign = 1
        for c in range(n):
            if not mask >> c & 1:
                continue
            a = e[row][c]
            if a.terms:
                term = a * det(row + 1, mask & ~(1 << c))
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return det(0, (1 << n) - 1)


def standard_symplectic(n: int = 2, scale=1) -> QMatrix:
    """Block-diagonal sum of n/2 copies of scale * [[0, 1], [-1, 0]]."""
    rows = [[Fraction(0)] * n for _ in range(n)]
    for k in range(0, n, 2):
        rows[k][k + 1] = Fraction(scale)
        rows[k + 1][k] = -Fraction(scale)
    return QMatrix(rows, n, n)
