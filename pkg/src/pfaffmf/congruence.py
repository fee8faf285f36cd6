"""Constant congruence witnesses: given skew M and constant A, B with A^-1 M B skew,
find a constant S with A^-1 M B = S^t M S.

The construction reduces to A = Id, passes to Jordan coordinates of B, checks
that M splits along the eigenvalue blocks, and takes a square root of each
block as a polynomial in its nilpotent part.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .field import sqrt_in_field
from .ring import N_VARS, Poly, QMatrix
from .skew import NotSkewError, PolyMatrix, SkewPolyMatrix


class SpectrumError(ValueError):
    """B has an eigenvalue outside the admissible set (irrational or zero)."""


class HypothesisError(ValueError):
    """A^-1 M B is not skew."""


class BlockVanishingError(RuntimeError):
    """M fails to split along the eigenvalue blocks although M B is skew."""


@dataclass(frozen=True)
class JordanData:
    T: QMatrix
    blocks: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def jordan_matrix(self) -> QMatrix:
        return jordan_matrix(self.blocks)

    def groups(self) -> list[range]:
        """Index ranges of the eigenvalue groups, in order."""
        out, start = [], 0
        for _, sizes in self.blocks:
            out.append(range(start, start + sum(sizes)))
            start += sum(sizes)
        return out


@dataclass(frozen=True)
class BlockSquareRoot:
    lam: object
    s_coefficients: tuple
    S: QMatrix


def jordan_matrix(blocks) -> QMatrix:
    """Upper Jordan matrix: lambda on the diagonal, 1 on the superdiagonal inside each block."""
    n = sum(sum(sizes) for _, sizes in blocks)
    rows = [[Fraction(0)] * n for _ in range(n)]
    pos = 0
    for lam, sizes in blocks:
        for k in sizes:
            for i in range(k):
                rows[pos + i][pos + i] = lam
                if i + 1 < k:
                    rows[pos + i][pos + i + 1] = Fraction(1)
            pos += k
    return QMatrix(rows, n, n)


def _eigenvalues(b: QMatrix) -> list[tuple[Fraction, int]]:
    t = sympy.Symbol("t")
    cp = sympy.Matrix([[sympy.Rational(str(x)) for x in r] for r in b.entries]).charpoly(t)
    _, factors = sympy.factor_list(cp.as_expr(), t)
    out = []
    for f, mult in factors:
        p = sympy.Poly(f, t)
        if p.degree() != 1:
            raise SpectrumError(f"eigenvalues are not rational: irreducible factor {f}")
        root = Fraction(str(-p.all_coeffs()[1] / p.all_coeffs()[0]))
        if root == 0:
            raise SpectrumError("zero eigenvalue")
        out.append((root, mult))
    return sorted(out)


def _independent_extension(base: list, candidates: list, want: int) -> list:
    """Pick ``want`` candidates independent modulo span(base), greedily in order."""
    picked = []
    current = list(base)
    rank = QMatrix(current).rank() if current else 0
    for v in candidates:
        if len(picked) == want:
            break
        trial = current + [v]
        r = QMatrix(trial).rank()
        if r > rank:
            picked.append(v)
            current, rank = trial, r
    if len(picked) != want:
        raise ArithmeticError("Jordan chain construction failed")
    return picked


def jordan_form(b: QMatrix) -> JordanData:
    """T and block data with T^-1 B T in upper Jordan form; eigenvalues ascending, blocks descending."""
    if b.rows != b.cols:
        raise ValueError("jordan_form needs a square matrix")
    if not b.is_rational():
        raise SpectrumError("jordan_form works over Q only")
    n = b.rows
    columns: list[tuple] = []
    blocks = []
    for lam, mult in _eigenvalues(b):
        nmat = b - QMatrix.identity(n) * lam
        kernels = [[]]
        power = QMatrix.identity(n)
        while len(kernels[-1]) < mult:
            power = power @ nmat
            kernels.append(power.kernel())
        top = len(kernels) - 1
        dims = [len(k) for k in kernels]
        # number of blocks of size >= k is dims[k] - dims[k-1]
        at_least = [0] + [dims[k] - dims[k - 1] for k in range(1, top + 1)] + [0]
        chains: list[list[tuple]] = []
        level_vectors: list[tuple] = []  # chain vectors living at the current level
        for k in range(top, 0, -1):
            exactly = at_least[k] - at_least[k + 1]
            new = _independent_extension(kernels[k - 1] + level_vectors, kernels[k], exactly)
            for v in new:
                chain = [v]
                for _ in range(k - 1):
                    chain.append(_apply(nmat, chain[-1]))
                chains.append(chain)
            # vectors of every chain at level k - 1
            level_vectors = [_level_of(c, k - 1) for c in chains if _level_of(c, k - 1) is not None]
        sizes = []
        for chain in chains:
            columns.extend(reversed(chain))
            sizes.append(len(chain))
        blocks.append((lam, tuple(sizes)))
    T = QMatrix([[columns[j][i] for j in range(n)] for i in range(n)], n, n)
    return JordanData(T, tuple(blocks))


def _level_of(chain: list, level: int):
    """Chain vector lying in ker N^level but not ker N^(level-1) (chain[0] is the top)."""
    idx = len(chain) - level
    if level < 1 or idx < 0:
        return None
    return chain[idx]


def _apply(m: QMatrix, v: tuple) -> tuple:
    return tuple(sum((m[i, j] * v[j] for j in range(m.cols)), Fraction(0)) for i in range(m.rows))


def _binomial_half(k: int) -> Fraction:
    c = Fraction(1)
    for i in range(k):
        c = c * (Fraction(1, 2) - i) / (i + 1)
    return c


def nilpotent_sqrt(lam, N: QMatrix, sign: int = 1, extension=None) -> BlockSquareRoot:
    """S = sum s_k N^k with S^2 = lam*Id + N, from the binomial series of sqrt(lam)*sqrt(1 + N/lam)."""
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    n = N.rows
    if not (N ** n).is_zero():
        raise ValueError("N is not nilpotent")
    s0 = sqrt_in_field(lam, extension) * sign
    coeffs = []
    S = QMatrix.zeros(n, n)
    power = QMatrix.identity(n)
    for k in range(n):
        if power.is_zero():
            break
        s = s0 * _binomial_half(k) / lam ** k
        coeffs.append(s)
        S = S + power * s
        power = power @ N
    if S @ S != QMatrix.identity(n) * lam + N:
        raise ArithmeticError("binomial series failed to square to lam*Id + N")
    return BlockSquareRoot(lam, tuple(coeffs), S)


def _constant(m: QMatrix, n_vars: int) -> PolyMatrix:
    return PolyMatrix.constant(m, n_vars)


def verify_block_vanishing(M: PolyMatrix, B: QMatrix) -> bool:
    """True iff M vanishes on every (i, j) with different diagonal values of the Jordan matrix B."""
    d = [B[i, i] for i in range(B.rows)]
    return all(not M[i, j].terms for i in range(M.rows) for j in range(M.cols) if d[i] != d[j])


def _witness_identity_case(M: PolyMatrix, B: QMatrix, extension, sign: int) -> QMatrix:
    jd = jordan_form(B)
    T = jd.T
    J = jd.jordan_matrix()
    n_vars = M.n_vars
    Mh = _constant(T.T, n_vars) @ M @ _constant(T, n_vars)
    if not verify_block_vanishing(Mh, J):
        raise BlockVanishingError("conjugated M has a nonzero off-diagonal eigenvalue block")
    roots = []
    for grp, (lam, _) in zip(jd.groups(), jd.blocks):
        Jl = J.submatrix(grp, grp)
        roots.append(nilpotent_sqrt(lam, Jl - QMatrix.identity(len(grp)) * lam,
                                    sign, extension).S)
    Sh = QMatrix.block_diag(roots)
    return T @ Sh @ T.inverse()


def skew_congruence_witness(M: PolyMatrix, A: QMatrix, B: QMatrix, extension=None,
                            sign: int = 1) -> QMatrix:
    """Constant S with A^-1 M B = S^t M S."""
    if not M.is_skew():
        raise NotSkewError("M must be skew")
    n_vars = M.n_vars
    Ainv = A.inverse()
    target = _constant(Ainv, n_vars) @ M @ _constant(B, n_vars)
    if not target.is_skew():
        raise HypothesisError("A^-1 M B is not skew")
    # M (B A^t) = (A S^t) M (S A^t): solve for S~ = S A^t with A = Id, then S = S~ A^-t
    St = _witness_identity_case(M, B @ A.T, extension, sign)
    S = St @ Ainv.T
    Sp = _constant(S, n_vars)
    if Sp.T @ M @ Sp != target:
        raise ArithmeticError("constructed witness failed the final check")
    return S


# ---------------------------------------------------------------------------
# instance generator


@dataclass(frozen=True)
class CongruenceInstance:
    M: SkewPolyMatrix
    A: QMatrix
    B: QMatrix
    S0: QMatrix

    def n_groups(self) -> int:
        """Number of distinct eigenvalues of B A^t."""
        return len(_eigenvalues(self.B_tilde()))

    def B_tilde(self) -> QMatrix:
        return self.B @ self.A.T


def _shift(m: int) -> QMatrix:
    return QMatrix([[Fraction(int(j == i + 1)) for j in range(m)] for i in range(m)], m, m)


def _commutant_basis(M: PolyMatrix) -> list[QMatrix]:
    """Basis of the constant S with M S = S^t M."""
    n = M.rows
    eqs: dict = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # (M S)_ij contributes M_ik S_kj; (S^t M)_ij contributes S_ki M_kj
                for mono, c in M[i, k].terms.items():
                    eqs.setdefault((i, j, mono), {})
                    key = k * n + j
                    eqs[(i, j, mono)][key] = eqs[(i, j, mono)].get(key, 0) + c
                for mono, c in M[k, j].terms.items():
                    eqs.setdefault((i, j, mono), {})
                    key = k * n + i
                    eqs[(i, j, mono)][key] = eqs[(i, j, mono)].get(key, 0) - c
    rows = [[e.get(v, 0) for v in range(n * n)] for e in eqs.values()]
    if not rows:
        rows = [[0] * (n * n)]
    kernel = QMatrix(rows, len(rows), n * n).kernel()
    return [QMatrix([[v[i * n + j] for j in range(n)] for i in range(n)], n, n) for v in kernel]


def _admissible(s0: QMatrix) -> bool:
    if not s0.det():
        return False
    try:
        _eigenvalues(s0)
    except SpectrumError:
        return False
    return True


def congruence_instance(rng: random.Random, groups=None, size: int = 4, n_vars: int = N_VARS,
                        random_a: bool = False, bound: int = 3) -> CongruenceInstance:
    """A random (M, A, B) with A^-1 M B skew and a known witness S0.

    M is P^t M0 P where M0 is a direct sum of blocks Omega * sum_k l_k N^k, with
    Omega = [[0, I], [-I, 0]], N = diag(shift, shift^t) and random linear forms l_k.
    S0 is a random admissible element of the solution space of M S = S^t M
    (falling back to a structured one), B = S0^2 (times A^-t when A is random).
    """
    if groups is None:
        half = size // 2
        parts = []
        while half:
            p = rng.randint(1, half)
            parts.append(p)
            half -= p
        groups = parts
    groups = list(groups)
    n = 2 * sum(groups)
    z = Poly.zero(n_vars)
    blocks_m = []
    blocks_s = []
    used = set()
    for m in groups:
        sh = _shift(m)
        N = QMatrix.block_diag([sh, sh.T])
        omega = QMatrix([[Fraction(0)] * m + [Fraction(int(i == j)) for j in range(m)]
                         for i in range(m)] +
                        [[Fraction(-int(i == j)) for j in range(m)] + [Fraction(0)] * m
                         for i in range(m)], 2 * m, 2 * m)
        block = PolyMatrix.zeros(2 * m, 2 * m, n_vars)
        power = QMatrix.identity(2 * m)
        for _ in range(m):
            form = Poly({tuple(int(i == v) for i in range(n_vars)): Fraction(rng.randint(-bound, bound))
                         for v in range(n_vars)}, n_vars)
            while not form.terms:
                form = Poly({tuple(int(i == v) for i in range(n_vars)):
                             Fraction(rng.randint(-bound, bound)) for v in range(n_vars)}, n_vars)
            block = block + PolyMatrix.constant(omega @ power, n_vars) * form
            power = power @ N
        blocks_m.append(block)
        mu = Fraction(rng.choice([v for v in range(-4, 5) if v and v * v not in used]))
        used.add(mu * mu)
        s = QMatrix.identity(2 * m) * mu
        power = N
        for _ in range(1, m):
            s = s + power * rng.randint(-2, 2)
            power = power @ N
        blocks_s.append(s)
    rows = [[z] * n for _ in range(n)]
    off = 0
    for blk in blocks_m:
        k = blk.rows
        for i in range(k):
            for j in range(k):
                rows[off + i][off + j] = blk[i, j]
        off += k
    M0 = SkewPolyMatrix(rows, n_vars=n_vars)
    while True:
        P = QMatrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)], n, n)
        if P.det():
            break
    M = SkewPolyMatrix.of(_constant(P.T, n_vars) @ M0 @ _constant(P, n_vars))
    S0 = P.inverse() @ QMatrix.block_diag(blocks_s) @ P
    basis = _commutant_basis(M)
    for _ in range(20):
        cand = QMatrix.zeros(n, n)
        for b in basis:
            cand = cand + b * rng.randint(-3, 3)
        if _admissible(cand):
            S0 = cand
            break
    B = S0 @ S0
    A = QMatrix.identity(n)
    if random_a:
        while True:
            A = QMatrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)], n, n)
            if A.det():
                break
        B = B @ A.inverse().T
    return CongruenceInstance(M, A, B, S0)
