"""Homogeneous polynomials over Q and exact linear algebra on graded pieces.

Polynomials live in Q[x0, ..., x_{n-1}] (five variables unless stated
otherwise). Monomials are exponent tuples; inside one degree they are ordered
graded-lexicographically with x0 > x1 > ... . Coefficients are ``Fraction``
values; elements of a quadratic extension (``field.QuadraticNumber``) are
accepted wherever only ring operations are needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .field import QuadraticNumber

N_VARS = 5
_SCALARS = (int, Fraction, QuadraticNumber)


class PolySyntaxError(ValueError):
    """Malformed polynomial text. ``position`` is the 0-based offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class HomogeneityError(ValueError):
    """An input polynomial is not homogeneous of the required degree."""


# ---------------------------------------------------------------------------
# monomials


def _compositions(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomial_basis(n_vars: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of total degree ``d``, in graded-lex order (largest first)."""
    if n_vars < 1 or d < 0:
        raise ValueError("need n_vars >= 1 and d >= 0")
    return tuple(_compositions(n_vars, d))


@lru_cache(maxsize=None)
def monomial_index(n_vars: int, d: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(monomial_basis(n_vars, d))}


def _mono_key(m):
    return (-sum(m), tuple(-e for e in m))


# ---------------------------------------------------------------------------
# polynomials


def _integral_items(terms: dict):
    """(monomial, int) pairs if every coefficient is an integral Fraction, else None."""
    out = []
    for m, c in terms.items():
        if type(c) is not Fraction or c.denominator != 1:
            return None
        out.append((m, c.numerator))
    return out


class Poly:
    """Immutable polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("terms", "n_vars", "_hash")

    def __init__(self, terms=None, n_vars: int = N_VARS):
        clean = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n_vars:
                    raise ValueError(f"monomial {m} does not have {n_vars} exponents")
                if any(e < 0 for e in m):
                    raise ValueError(f"negative exponent in {m}")
                if isinstance(c, int):
                    c = Fraction(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
                    if not clean[m]:
                        del clean[m]
        self.terms = clean
        self.n_vars = n_vars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, n_vars: int) -> Poly:
        p = object.__new__(cls)
        p.terms = terms
        p.n_vars = n_vars
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, n_vars: int = N_VARS) -> Poly:
        return cls._raw({}, n_vars)

    @classmethod
    def const(cls, c, n_vars: int = N_VARS) -> Poly:
        if isinstance(c, int):
            c = Fraction(c)
        return cls._raw({(0,) * n_vars: c} if c else {}, n_vars)

    @classmethod
    def var(cls, i: int, n_vars: int = N_VARS) -> Poly:
        if not 0 <= i < n_vars:
            raise ValueError(f"variable index {i} out of range for {n_vars} variables")
        m = [0] * n_vars
        m[i] = 1
        return cls._raw({tuple(m): Fraction(1)}, n_vars)

    @classmethod
    def from_coeff_vector(cls, vec, d: int, n_vars: int = N_VARS) -> Poly:
        basis = monomial_basis(n_vars, d)
        if len(vec) != len(basis):
            raise ValueError("coefficient vector has the wrong length")
        terms = {}
        for m, c in zip(basis, vec):
            if c:
                terms[m] = Fraction(c) if isinstance(c, int) else c
        return cls._raw(terms, n_vars)

    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> int | None:
        """Total degree (None for the zero polynomial)."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    @property
    def declared_degree(self) -> int | None:
        """Common degree of all terms if the polynomial is homogeneous and nonzero."""
        degs = {sum(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self, d: int | None = None) -> bool:
        """Zero counts as homogeneous of every degree."""
        if not self.terms:
            return True
        degs = {sum(m) for m in self.terms}
        return len(degs) == 1 and (d is None or d in degs)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * self.n_vars, Fraction(0))

    def coeff(self, m) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def coeff_vector(self, d: int) -> list:
        """Coefficients on the degree-``d`` monomial basis."""
        if not self.is_homogeneous(d):
            raise HomogeneityError(f"{self} is not homogeneous of degree {d}")
        idx = monomial_index(self.n_vars, d)
        vec = [Fraction(0)] * len(idx)
        for m, c in self.terms.items():
            vec[idx[m]] = c
        return vec

    # arithmetic

    def _check(self, other: Poly):
        if other.n_vars != self.n_vars:
            raise ValueError("polynomials in different numbers of variables")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, _SCALARS):
            return Poly.const(other, self.n_vars)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        terms = dict(self.terms)
        for m, c in o.terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Poly._raw(terms, self.n_vars)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()}, self.n_vars)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            if not self.terms or not other.terms:
                return Poly._raw({}, self.n_vars)
            left, right = _integral_items(self.terms), _integral_items(other.terms)
            integral = left is not None and right is not None
            if not integral:
                left, right = self.terms.items(), other.terms.items()
            terms = {}
            get = terms.get
            for m1, c1 in left:
                for m2, c2 in right:
                    m = tuple([a + b for a, b in zip(m1, m2)])
                    terms[m] = get(m, 0) + c1 * c2
            if integral:
                return Poly._raw({m: Fraction(c) for m, c in terms.items() if c}, self.n_vars)
            return Poly._raw({m: c for m, c in terms.items() if c}, self.n_vars)
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, _SCALARS):
            if not other:
                return Poly._raw({}, self.n_vars)
            return Poly._raw({m: c * other for m, c in self.terms.items()}, self.n_vars)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.n_vars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n_vars == other.n_vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other, self.n_vars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n_vars, frozenset(self.terms.items())))
        return self._hash

    def ratio_to(self, other: Poly):
        """The constant c with ``self == c * other``, or None. ``other`` must be nonzero."""
        if not other.terms:
            raise ZeroDivisionError("ratio to the zero polynomial")
        if not self.terms:
            return Fraction(0)
        m0, c0 = next(iter(other.terms.items()))
        if m0 not in self.terms:
            return None
        c = self.terms[m0] / c0
        return c if self == other * c else None

    def evaluate(self, point):
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x ** e
            total = total + v
        return total

    # printing

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _mono_key(mc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(m) if e]
            neg = isinstance(c, Fraction) and c < 0
            mag = -c if neg else c
            if factors and mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if k == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly('{self}')"


def variables(n_vars: int = N_VARS) -> list[Poly]:
    return [Poly.var(i, n_vars) for i in range(n_vars)]


# ---------------------------------------------------------------------------
# parsing


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self._skip()

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        self._skip()
        return ch

    def integer(self) -> int:
        start = self.pos
        end = start
        while end < len(self.text) and self.text[end].isdigit():
            end += 1
        if end == start:
            raise PolySyntaxError("expected an integer", start)
        self.pos = end
        self._skip()
        return int(self.text[start:end])


def parse_poly(text: str, n_vars: int = N_VARS) -> Poly:
    """Parse polynomial text such as ``"x0*x1 - 1/2*x2^2"``.

    Grammar: ``poly := ['+'|'-'] term (('+'|'-') term)*``, ``term := (coeff |
    factor) ('*' factor)*``, ``factor := 'x' index ['^' exponent]``, ``coeff :=
    integer ['/' positive-integer]``. Whitespace is ignored.
    """
    sc = _Scanner(text)
    if sc.peek() == "":
        raise PolySyntaxError("empty polynomial", 0)
    terms: dict = {}

    def factor(mono: list[int]):
        if sc.peek() != "x":
            raise PolySyntaxError("expected a variable 'x<index>'", sc.pos)
        sc.take()
        pos = sc.pos
        i = sc.integer()
        if i >= n_vars:
            raise PolySyntaxError(f"variable x{i} out of range for {n_vars} variables", pos)
        e = 1
        if sc.peek() == "^":
            sc.take()
            e = sc.integer()
        mono[i] += e

    sign = 1
    if sc.peek() in "+-" and sc.peek():
        sign = -1 if sc.take() == "-" else 1
    while True:
        mono = [0] * n_vars
        coeff = Fraction(1)
        if sc.peek().isdigit():
            num = sc.integer()
            if sc.peek() == "/":
                sc.take()
                pos = sc.pos
                den = sc.integer()
                if den == 0:
                    raise PolySyntaxError("zero denominator", pos)
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
        else:
            factor(mono)
        while sc.peek() == "*":
            sc.take()
            factor(mono)
        key = tuple(mono)
        v = terms.get(key, 0) + sign * coeff
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
        ch = sc.peek()
        if ch == "":
            break
        if ch not in "+-":
            raise PolySyntaxError(f"unexpected character {ch!r}", sc.pos)
        sign = -1 if sc.take() == "-" else 1
    return Poly._raw(terms, n_vars)


# ---------------------------------------------------------------------------
# exact linear algebra


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def _int_row(row) -> list[int]:
    den = 1
    for x in row:
        if x:
            d = x.denominator
            den = den * d // gcd(den, d)
    return [int(x * den) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _int_gauss_jordan(rows: list[list[int]], ncols: int, reduced: bool):
    """Fraction-free elimination on integer rows.

    Returns (rows, pivots): pivot row k has its pivot in column pivots[k];
    below-pivot entries are zero, and with ``reduced`` also above-pivot ones.
    """
    rows = [_primitive(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = None
        best = None
        for k in range(r, len(rows)):
            v = rows[k][c]
            if v and (best is None or abs(v) < best):
                p, best = k, abs(v)
                if best == 1:
                    break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        a = prow[c]
        targets = range(len(rows)) if reduced else range(r + 1, len(rows))
        for k in targets:
            if k == r:
                continue
            b = rows[k][c]
            if b:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                rows[k] = _primitive([fa * x - fb * y for x, y in zip(rows[k], prow)])
        pivots.append(c)
        r += 1
        if not reduced:
            rows[r:] = [row for row in rows[r:] if any(row)]
    return rows[: len(pivots)], pivots


def _field_gauss_jordan(rows, ncols: int):
    """Gauss-Jordan over an arbitrary exact field (used for quadratic extensions)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[: len(pivots)], pivots


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if all(_is_rational(x) for r in rows for x in r):
        irows, pivots = _int_gauss_jordan([_int_row(r) for r in rows], ncols, reduced=True)
        out = [[Fraction(x, row[p]) for x in row] for row, p in zip(irows, pivots)]
        return out, pivots
    return _field_gauss_jordan(rows, ncols)


def rank_of_rows(rows, ncols: int | None = None) -> int:
    rows = [r for r in rows]
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    if all(_is_rational(x) for r in rows for x in r):
        return len(_int_gauss_jordan([_int_row(r) for r in rows], ncols, reduced=False)[1])
    return len(_field_gauss_jordan(rows, ncols)[1])


def echelon_basis(rows, ncols: int) -> list[list[int]]:
    """A basis (integer, echelon) of the rational row span."""
    if not rows:
        return []
    return _int_gauss_jordan([_int_row(r) for r in rows], ncols, reduced=False)[0]


def kernel_of_rows(rows, ncols: int) -> list[list]:
    """Basis of {v : row . v = 0 for every row}, read off the RREF."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


class QMatrix:
    """Dense matrix of exact field elements (rationals unless an extension is in use)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, rows: int | None = None, cols: int | None = None):
        data = tuple(tuple(Fraction(x) if isinstance(x, (int, str)) else x for x in r)
                     for r in entries)
        self.rows = len(data) if rows is None else rows
        self.cols = (len(data[0]) if data else 0) if cols is None else cols
        if len(data) != self.rows or any(len(r) != self.cols for r in data):
            raise ValueError("ragged or mis-sized matrix entries")
        self.entries = data

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        return cls([[Fraction(0)] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def diag(cls, values) -> QMatrix:
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, blocks) -> QMatrix:
        n = sum(b.rows for b in blocks)
        out = [[Fraction(0)] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[off + i][off + j] = b.entries[i][j]
            off += b.rows
        return cls(out, n, n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> QMatrix:
        return QMatrix([list(c) for c in zip(*self.entries)] if self.rows else [],
                       self.cols, self.rows)

    @property
    def T(self) -> QMatrix:
        return self.transpose()

    def submatrix(self, rows, cols) -> QMatrix:
        return QMatrix([[self.entries[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = other.transpose().entries
        out = []
        for r in self.entries:
            out.append([sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols])
        return QMatrix(out, self.rows, other.cols)

    def __add__(self, other: QMatrix) -> QMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return QMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                       self.rows, self.cols)

    def __sub__(self, other: QMatrix) -> QMatrix:
        return self + (-other)

    def __neg__(self) -> QMatrix:
        return QMatrix([[-a for a in r] for r in self.entries], self.rows, self.cols)

    def __mul__(self, c) -> QMatrix:
        return QMatrix([[a * c for a in r] for r in self.entries], self.rows, self.cols)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QMatrix:
        result = QMatrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self.entries)

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def is_rational(self) -> bool:
        return all(_is_rational(x) for r in self.entries for x in r)

    def rank(self) -> int:
        return rank_of_rows(self.entries, self.cols)

    def rref(self) -> tuple[QMatrix, list[int]]:
        red, pivots = rref(self.entries, self.cols)
        red = red + [[Fraction(0)] * self.cols for _ in range(self.rows - len(red))]
        return QMatrix(red, self.rows, self.cols), pivots

    def kernel(self) -> list[tuple]:
        return [tuple(v) for v in kernel_of_rows(self.entries, self.cols)]

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.entries]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            p = next((k for k in range(c, n) if a[k][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            det = det * a[c][c]
            inv = 1 / a[c][c]
            for k in range(c + 1, n):
                if a[k][c]:
                    f = a[k][c] * inv
                    a[k] = [x - f * y for x, y in zip(a[k], a[c])]
        return det

    def inverse(self) -> QMatrix:
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)]
               for i, r in enumerate(self.entries)]
        red, pivots = rref(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("matrix is singular")
        return QMatrix([r[n:] for r in red[:n]], n, n)

    def is_skew(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.rows) for j in range(i, self.rows))

    def to_lists(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]

    def __repr__(self):
        return f"QMatrix({self.to_lists()})"


def qmat_kernel(mat: QMatrix) -> list[tuple]:
    """Basis of the right kernel of ``mat``; ``cols - rank`` vectors."""
    return mat.kernel()


def span_dimension(polys, d: int, n_vars: int | None = None) -> int:
    """Dimension of the Q-span of homogeneous degree-``d`` polynomials."""
    polys = list(polys)
    if not polys:
        return 0
    n = n_vars or polys[0].n_vars
    rows = [p.coeff_vector(d) for p in polys]
    return rank_of_rows(rows, len(monomial_basis(n, d)))
