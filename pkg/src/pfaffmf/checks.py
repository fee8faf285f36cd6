"""Seeded randomized property suites. Each returns a deterministic summary dict."""

from __future__ import annotations

import random
from fractions import Fraction

from .classify import TableClass, classify_table
from .congruence import congruence_instance, skew_congruence_witness
from .generators import random_gamma, random_gl, random_nonzero_pfaffian, random_skew_linear
from .mf import gamma_apply, mf_from_pfaffian, mf_normalize_caseA, mf_verify
from .ring import Poly
from .skew import PolyMatrix, congruence_transform, determinant, pf_adjoint, pfaffian
from .syzygy import ideal_contains
from .table import TAGS, table1_matrix


def _summary(name: str, seed: int, results: list) -> dict:
    failures = [r for r in results if not r["ok"]]
    return {"suite": name, "seed": seed, "samples": len(results),
            "passed": len(results) - len(failures), "failed": len(failures),
            "failures": failures[:10]}


def pfaffian_suite(samples: int, seed: int) -> dict:
    rng = random.Random(seed)
    results = []
    for i in range(samples):
        m = random_skew_linear(rng)
        pf = pfaffian(m)
        g = random_gl(rng, 6, 2)
        checks = {
            "pf_squared_is_det": pf * pf == determinant(m),
            "adjoint_identity": m @ pf_adjoint(m) == PolyMatrix.identity(6) * pf,
            "congruence_scaling": pfaffian(congruence_transform(m, g)) == pf * g.det(),
        }
        results.append({"sample": i, "ok": all(checks.values()), **checks})
    return _summary("pfaffian", seed, results)


def mf_suite(samples: int, seed: int) -> dict:
    rng = random.Random(seed)
    results = []
    for i in range(samples):
        m = random_nonzero_pfaffian(rng)
        t = mf_from_pfaffian(m)
        base = mf_verify(t)
        gamma = random_gamma(rng, unipotent=i % 2 == 0)
        moved = gamma_apply(gamma, t)
        rep = mf_verify(moved)
        g6 = PolyMatrix.constant(gamma.g6)
        norm = mf_normalize_caseA(moved)
        checks = {
            "built_scalars_one": base.ok and all(c == 1 for c in (base.c_ab, base.c_ba,
                                                                  base.c_pfA, base.c_pfB)),
            "translate_verifies": rep.ok,
            "a1_transforms": moved.A1 == g6 @ m @ g6.T,
            "normal_shape": mf_verify(norm.triple).ok and norm.triple.A2.is_zero()
            and norm.triple.B1.is_zero(),
            "b0_iff_pf": moved.B0.is_zero() == (not pfaffian(moved.A1).terms),
        }
        results.append({"sample": i, "ok": all(checks.values()), "lambda": str(norm.lam),
                        **checks})
    return _summary("mf", seed, results)


def classify_suite(samples: int, seed: int) -> dict:
    rng = random.Random(seed)
    results = []
    for i in range(samples):
        tag = TAGS[i % len(TAGS)]
        g = random_gl(rng, 6)
        got = classify_table(congruence_transform(table1_matrix(tag), g))
        results.append({"sample": i, "ok": got is TableClass(tag), "expected": tag,
                        "got": got.value})
    return _summary("classify", seed, results)


def congruence_suite(samples: int, seed: int) -> dict:
    rng = random.Random(seed)
    results = []
    for i in range(samples):
        inst = congruence_instance(rng, size=rng.choice([4, 6]), random_a=i % 4 == 3)
        S = skew_congruence_witness(inst.M, inst.A, inst.B)
        n = inst.M.n_vars
        Sp = PolyMatrix.constant(S, n)
        lhs = Sp.T @ inst.M @ Sp
        rhs = PolyMatrix.constant(inst.A.inverse(), n) @ inst.M @ PolyMatrix.constant(inst.B, n)
        results.append({"sample": i, "ok": lhs == rhs and bool(S.det()),
                        "eigenvalue_groups": inst.n_groups()})
    return _summary("congruence", seed, results)


def random_monomial_instance(rng: random.Random, n_vars: int = 3, max_degree: int = 3):
    """(f, gens) with monomial gens and a monomial or binomial f."""
    def mono(d):
        e = [0] * n_vars
        for _ in range(d):
            e[rng.randrange(n_vars)] += 1
        return tuple(e)
    gens = [mono(rng.randint(1, max_degree)) for _ in range(rng.randint(1, 3))]
    d = rng.randint(1, max_degree)
    f = [mono(d) for _ in range(rng.randint(1, 2))]
    return f, gens


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def divisibility_oracle(f_monos, gens) -> bool:
    """A polynomial with these monomials lies in a monomial ideal iff each monomial does."""
    return all(any(divides(g, m) for g in gens) for m in f_monos)


def membership_suite(samples: int, seed: int) -> dict:
    rng = random.Random(seed)
    results = []
    for i in range(samples):
        f_monos, gens = random_monomial_instance(rng)
        n = 3
        f = Poly({m: Fraction(rng.choice([1, 2, -3])) for m in f_monos}, n)
        expected = divisibility_oracle(list(f.terms), gens)
        got = ideal_contains(f, [Poly({g: Fraction(1)}, n) for g in gens])
        results.append({"sample": i, "ok": got == expected})
    return _summary("membership", seed, results)


SUITES = {
    "pfaffian": pfaffian_suite,
    "mf": mf_suite,
    "classify": classify_suite,
    "congruence": congruence_suite,
    "membership": membership_suite,
}
