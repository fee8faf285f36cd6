"""Matrix factorizations (A, B, F) of a cubic F by skew 8x8 matrices.

A = [[A3, A2], [-A2^t, A1]] and B = [[B0, B1^t], [-B1, B2]] with the block
degrees of the graded module 2*O(1) + 6*O: A3 cubic, A2 quadratic, A1 linear,
B0 constant, B1 linear, B2 quadratic. The group of block-triangular
automorphisms acts by A -> g A g^t and B -> d^t B d with d = g^-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import TableClass, classify_table, curve_ideal_generators
from .field import rational_sqrt, sqrt_in_field
from .ring import Poly, QMatrix, rank_of_rows
from .skew import GradingError, PolyMatrix, ShapeError, pf_adjoint, pfaffian, standard_symplectic
from .syzygy import ideal_contains, linear_syzygy_matrix
from .table import read_normal_form

BLOCK_DEGREES = {"A3": 3, "A2": 2, "A1": 1, "B0": 0, "B1": 1, "B2": 2}
BLOCK_SHAPES = {"A3": (2, 2), "A2": (2, 6), "A1": (6, 6), "B0": (2, 2), "B1": (6, 2), "B2": (6, 6)}
SKEW_BLOCKS = ("A3", "A1", "B0", "B2")

# B0 of the normal form; with A3 = [[0, F], [-F, 0]] this gives A3 B0 = F Id
NORMAL_B0 = standard_symplectic(2, -1)


class MFError(ValueError):
    pass


@dataclass(frozen=True)
class MFTriple:
    A3: PolyMatrix
    A2: PolyMatrix
    A1: PolyMatrix
    B0: PolyMatrix
    B1: PolyMatrix
    B2: PolyMatrix
    F: Poly

    def __post_init__(self):
        for name, d in BLOCK_DEGREES.items():
            m = getattr(self, name)
            if not isinstance(m, PolyMatrix):
                raise TypeError(f"{name} must be a PolyMatrix")
            if m.shape != BLOCK_SHAPES[name]:
                raise ShapeError(f"{name} has shape {m.shape}, expected {BLOCK_SHAPES[name]}")
            if not m.entries_of_degree(d):
                raise GradingError(f"{name} entries must be homogeneous of degree {d}")
            if name in SKEW_BLOCKS and not m.is_skew():
                raise GradingError(f"{name} must be skew-symmetric")
        if not self.F.terms or not self.F.is_homogeneous(3):
            raise GradingError("F must be a nonzero cubic form")

    @property
    def n_vars(self) -> int:
        return self.F.n_vars

    def assembled_A(self) -> PolyMatrix:
        return PolyMatrix.block([[self.A3, self.A2], [-self.A2.T, self.A1]])

    def assembled_B(self) -> PolyMatrix:
        return PolyMatrix.block([[self.B0, self.B1.T], [-self.B1, self.B2]])

    @classmethod
    def from_blocks(cls, A: PolyMatrix, B: PolyMatrix, F: Poly) -> MFTriple:
        return cls(A.submatrix(range(2), range(2)), A.submatrix(range(2), range(2, 8)),
                   A.submatrix(range(2, 8), range(2, 8)), B.submatrix(range(2), range(2)),
                   -B.submatrix(range(2, 8), range(2)),
                   B.submatrix(range(2, 8), range(2, 8)), F)

    def replace(self, **kw) -> MFTriple:
        data = {k: getattr(self, k) for k in (*BLOCK_DEGREES, "F")}
        data.update(kw)
        return MFTriple(**data)


@dataclass(frozen=True)
class VerifyReport:
    ab_ok: bool
    ba_ok: bool
    pfA_ok: bool
    pfB_ok: bool
    nonzero_ok: bool
    c_ab: object
    c_ba: object
    c_pfA: object
    c_pfB: object
    block_scalars: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.ab_ok and self.ba_ok and self.pfA_ok and self.pfB_ok and self.nonzero_ok

    def to_dict(self) -> dict:
        def s(x):
            return None if x is None else str(x)
        return {
            "ok": self.ok,
            "ab_ok": self.ab_ok, "ba_ok": self.ba_ok, "pfA_ok": self.pfA_ok,
            "pfB_ok": self.pfB_ok, "nonzero_ok": self.nonzero_ok,
            "c_ab": s(self.c_ab), "c_ba": s(self.c_ba),
            "c_pfA": s(self.c_pfA), "c_pfB": s(self.c_pfB),
            "block_scalars": {k: s(v) for k, v in self.block_scalars.items()},
        }


def _scalar_times_identity(prod: PolyMatrix, F: Poly, n: int):
    """c with prod == c * F * Id_n, or None."""
    return prod.proportionality(PolyMatrix.identity(n, F.n_vars) * F)


def mf_verify(t: MFTriple) -> VerifyReport:
    A, B = t.assembled_A(), t.assembled_B()
    ab, ba = A @ B, B @ A
    F = t.F
    c_ab = _scalar_times_identity(ab, F, 8)
    c_ba = _scalar_times_identity(ba, F, 8)
    pa, pb = pfaffian(A), pfaffian(B)
    F2 = F * F
    c_pfA = pa.ratio_to(F2)
    c_pfB = pb.ratio_to(F2)
    blocks = {}
    for name, prod in (("ab", ab), ("ba", ba)):
        blocks[name + "_top"] = _scalar_times_identity(prod.submatrix(range(2), range(2)), F, 2)
        blocks[name + "_bottom"] = _scalar_times_identity(
            prod.submatrix(range(2, 8), range(2, 8)), F, 6)
    nonzero = not ab.is_zero() and not ba.is_zero() and bool(pa.terms) and bool(pb.terms)
    return VerifyReport(
        ab_ok=bool(c_ab), ba_ok=bool(c_ba), pfA_ok=bool(c_pfA), pfB_ok=bool(c_pfB),
        nonzero_ok=nonzero, c_ab=c_ab, c_ba=c_ba, c_pfA=c_pfA, c_pfB=c_pfB,
        block_scalars=blocks)


def mf_from_pfaffian(m: PolyMatrix) -> MFTriple:
    """The normal-form triple A = [[0,F],[-F,0]] + M, B = [[0,-1],[1,0]] + adj(M), F = Pf(M)."""
    if m.shape != (6, 6) or not m.is_skew() or not m.entries_of_degree(1):
        raise MFError("expected a skew 6x6 matrix of linear forms")
    F = pfaffian(m)
    if not F.terms:
        raise MFError("Pf(M) = 0: no case-(A) factorization")
    n = m.n_vars
    z = Poly.zero(n)
    return MFTriple(
        A3=PolyMatrix([[z, F], [-F, z]], n_vars=n),
        A2=PolyMatrix.zeros(2, 6, n),
        A1=m,
        B0=PolyMatrix.constant(NORMAL_B0, n),
        B1=PolyMatrix.zeros(6, 2, n),
        B2=pf_adjoint(m),
        F=F,
    )


# ---------------------------------------------------------------------------
# the group action


@dataclass(frozen=True)
class GammaElement:
    """The automorphism [[g2, u], [0, g6]] with constant g2, g6 and linear u."""

    g2: QMatrix
    u: PolyMatrix
    g6: QMatrix

    def __post_init__(self):
        if self.g2.shape != (2, 2) or self.g6.shape != (6, 6) or self.u.shape != (2, 6):
            raise ShapeError("gamma blocks must be 2x2, 2x6 and 6x6")
        if not self.u.entries_of_degree(1):
            raise GradingError("u must consist of linear forms")
        if not self.g2.det() or not self.g6.det():
            raise MFError("g2 and g6 must be invertible")

    @classmethod
    def identity(cls, n_vars: int = 5) -> GammaElement:
        return cls(QMatrix.identity(2), PolyMatrix.zeros(2, 6, n_vars), QMatrix.identity(6))

    def matrix(self) -> PolyMatrix:
        n = self.u.n_vars
        return PolyMatrix.block([[PolyMatrix.constant(self.g2, n), self.u],
                                 [PolyMatrix.zeros(6, 2, n), PolyMatrix.constant(self.g6, n)]])

    def compose(self, other: GammaElement) -> GammaElement:
        """self * other as block matrices (other acts first)."""
        u = PolyMatrix.constant(self.g2, self.u.n_vars) @ other.u + self.u @ other.g6
        return GammaElement(self.g2 @ other.g2, u, self.g6 @ other.g6)

    def is_identity(self) -> bool:
        return (self.g2 == QMatrix.identity(2) and self.g6 == QMatrix.identity(6)
                and self.u.is_zero())


def gamma_invert(g: GammaElement) -> GammaElement:
    h2, h6 = g.g2.inverse(), g.g6.inverse()
    n = g.u.n_vars
    v = -(PolyMatrix.constant(h2, n) @ g.u @ h6)
    return GammaElement(h2, v, h6)


def gamma_apply(g: GammaElement, t: MFTriple) -> MFTriple:
    """(g A g^t, d^t B d, F) with d = g^-1."""
    gm = g.matrix()
    dm = gamma_invert(g).matrix()
    A = gm @ t.assembled_A() @ gm.T
    B = dm.T @ t.assembled_B() @ dm
    return MFTriple.from_blocks(A, B, t.F)


# ---------------------------------------------------------------------------
# normal forms


@dataclass(frozen=True)
class Normalization:
    gamma: GammaElement
    triple: MFTriple
    lam: object
    b_scale: object = 1


def mf_normalize_caseA(t: MFTriple, extension: bool = False) -> Normalization:
    """Move a triple with B0 != 0 to the normal form up to one scalar.

    Returns gamma, the translate t' and lam with A2' = 0, B1' = 0,
    B0' = [[0,-1],[1,0]], A3' = lam*[[0,F'],[-F',0]] and B2' = lam*adj(A1'),
    where F' = Pf(A1') spans the same line as F. With ``extension`` the scalar
    is absorbed by diag(1/sqrt(lam), 1/sqrt(lam), 1, ...) over Q(sqrt(lam)) and
    by rescaling B with 1/lam (reported as ``b_scale``), leaving lam = 1.
    """
    b0 = t.B0.to_qmatrix()
    if b0.is_zero():
        raise MFError("B0 = 0: use the case-(B) check instead")
    n = t.n_vars
    b = b0[0, 1]
    g2 = QMatrix.diag([-b, 1])
    u = PolyMatrix.constant(g2 @ b0.inverse(), n) @ t.B1.T
    gamma = GammaElement(g2, u, QMatrix.identity(6))
    moved = gamma_apply(gamma, t)
    pf1 = pfaffian(moved.A1)
    if not pf1.terms:
        raise MFError("B0 != 0 but Pf(A1) = 0; not a verified factorization")
    adj = pf_adjoint(moved.A1)
    z = Poly.zero(n)
    J = PolyMatrix([[z, pf1], [-pf1, z]], n_vars=n)
    lam = moved.A3.proportionality(J)
    if (lam is None or not moved.A2.is_zero() or not moved.B1.is_zero()
            or moved.B0.to_qmatrix() != NORMAL_B0 or moved.B2 != adj * lam):
        raise MFError("triple does not reach the normal form; verify it first")
    result = moved.replace(F=pf1)
    if not extension or lam == 1:
        return Normalization(gamma, result, lam)
    mu = sqrt_in_field(lam, extension=None if rational_sqrt(lam) is not None else lam)
    inv = 1 / mu
    scale = GammaElement(QMatrix.diag([inv, inv]), PolyMatrix.zeros(2, 6, n), QMatrix.identity(6))
    moved = gamma_apply(scale, result)
    b_scale = 1 / lam
    final = moved.replace(B0=moved.B0 * b_scale, B2=moved.B2 * b_scale)
    return Normalization(scale.compose(gamma), final, 1, b_scale)


def mf_caseB_check(t: MFTriple) -> dict:
    """Structure checks for a triple with B0 = 0 (A1 should be a normal-form class with B1 its S)."""
    if not t.B0.is_zero():
        raise MFError("B0 != 0: use the case-(A) normalization")
    pf1 = pfaffian(t.A1)
    pf_zero = not pf1.terms
    cls = classify_table(t.A1)
    a1b1 = (t.A1 @ t.B1).is_zero()
    cols = [t.B1.column(j) for j in range(2)]
    coeff = [sum((list(p.coeff_vector(1)) for p in c), []) for c in cols]
    independent = rank_of_rows(coeff) == 2
    spans = False
    if a1b1 and independent:
        k = linear_syzygy_matrix(t.A1)
        kc = [sum((list(p.coeff_vector(1)) for p in k.column(j)), []) for j in range(k.cols)]
        spans = k.cols == 2 and rank_of_rows(kc + coeff) == 2
    report = {
        "pf_a1_zero": pf_zero,
        "class": cls.value,
        "a1_b1_zero": a1b1,
        "b1_independent": independent,
        "b1_spans_syzygies": spans,
        "contradiction": not pf_zero,
    }
    report["ok"] = pf_zero and cls.is_table_class and a1b1 and independent and spans
    return report


def psi(t: MFTriple, witness: QMatrix | None = None):
    """The pair (A1, F) with a report on how F relates to A1.

    Pf(A1) != 0: F must be a nonzero multiple of Pf(A1). Pf(A1) = 0: A1 is
    classified and F must lie in the curve ideal(s) of its class, read in the
    normal-form coordinates of A1 (or of witness^t A1 witness).
    """
    rep = mf_verify(t)
    if not rep.ok:
        raise MFError("psi needs a verified factorization")
    a1, F = t.A1, t.F
    pf1 = pfaffian(a1)
    report = {"pf_a1_zero": not pf1.terms}
    if pf1.terms:
        c = pf1.ratio_to(F)
        report.update({"class": TableClass.NONZERO_PFAFFIAN.value,
                       "scalar": None if c is None else str(c),
                       "status": "ok" if c else "fail"})
        return a1, F, report
    cls = classify_table(a1)
    if not cls.is_table_class:
        raise MFError("Pf(A1) = 0 but A1 matches no normal-form class")
    report["class"] = cls.value
    target = a1
    if witness is not None:
        w = PolyMatrix.constant(witness, a1.n_vars)
        target = w.T @ a1 @ w
    forms = read_normal_form(cls.value, target)
    if forms is None:
        report["status"] = "witness_required"
        return a1, F, report
    lists = curve_ideal_generators(cls, forms)
    member = [ideal_contains(F, gens) for gens in lists]
    report.update({"forms": [str(f) for f in forms],
                   "ideals": [[str(g) for g in gens] for gens in lists],
                   "membership": member,
                   "status": "ok" if all(member) else "fail"})
    return a1, F, report


def projectively_equal(s: MFTriple, t: MFTriple) -> bool:
    """Same A, and B and F agreeing up to one common nonzero scalar each."""
    if s.assembled_A() != t.assembled_A():
        return False
    c = s.assembled_B().proportionality(t.assembled_B())
    d = s.F.ratio_to(t.F)
    return bool(c) and bool(d)
