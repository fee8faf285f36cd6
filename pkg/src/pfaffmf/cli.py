"""Command-line interface. Reports are JSON on stdout; exit 0 ok, 1 property fails, 2 bad input."""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import io
from .checks import SUITES
from .classify import classification_report
from .congruence import (BlockVanishingError, HypothesisError, SpectrumError,
                         congruence_instance, skew_congruence_witness)
from .field import NotASquareError
from .generators import random_nonzero_pfaffian
from .mf import (MFError, gamma_apply, mf_caseB_check, mf_from_pfaffian, mf_normalize_caseA,
                 mf_verify, psi)
from .ring import HomogeneityError
from .skew import (GradingError, NotSkewError, ShapeError, pf_adjoint, pfaffian, require_skew,
                   sub_pfaffians)
from .syzygy import GradedMap, all_minors_2x2, graded_kernel
from .table import ADJOINT_SIGN, STABILITY, TAGS, table1_pair

EXIT = {"ok": 0, "fail": 1, "error": 2}


class JsonArgumentParser(argparse.ArgumentParser):
    """Usage errors become a JSON error report with exit code 2."""

    def error(self, message):
        report = {"status": "error", "error": {"type": "UsageError", "message": message}}
        sys.stdout.write(io.dumps(report) + "\n")
        sys.exit(EXIT["error"])


def _ok(**fields) -> dict:
    return {"status": "ok", **fields}


def _fail(**fields) -> dict:
    return {"status": "fail", **fields}


def _matrix(path, square_skew: bool = False):
    m = io.matrix_from_json(io.load_json(path))
    if square_skew:
        require_skew(m)
    return m


# ---------------------------------------------------------------------------
# subcommands


def cmd_pf(args) -> dict:
    return _ok(pfaffian=str(pfaffian(_matrix(args.input, True))))


def cmd_adjpf(args) -> dict:
    m = _matrix(args.input, True)
    require_skew(m, 6)
    return _ok(adjoint=io.matrix_to_json(pf_adjoint(m)))


def cmd_subpf(args) -> dict:
    m = _matrix(args.input, True)
    require_skew(m, 6)
    return _ok(sub_pfaffians={f"{i},{j}": str(p) for (i, j), p in sub_pfaffians(m).items()})


def _uniform_degree(m) -> int:
    degs = {p.degree for r in m.entries for p in r if p.terms}
    if len(degs) != 1:
        raise GradingError("entries must share one degree (or give a grading)")
    return degs.pop()


def cmd_syz(args) -> dict:
    m = _matrix(args.input)
    if m.grading is not None:
        # file gradings are generator degrees; R(-d) has twist -d
        gmap = GradedMap(m, [-d for d in m.grading[0]], [-e for e in m.grading[1]])
    else:
        gmap = GradedMap.uniform(m, _uniform_degree(m))
    degree = 1 if args.degree is None else args.degree
    basis = graded_kernel(gmap, degree)
    return _ok(degree=degree, dimension=len(basis),
               columns=[[str(p) for p in col] for col in basis.columns])


def cmd_minors(args) -> dict:
    return _ok(minors=[str(p) for p in all_minors_2x2(_matrix(args.input))])


def cmd_classify(args) -> dict:
    m = _matrix(args.input, True)
    require_skew(m, 6)
    return _ok(**classification_report(m))


def cmd_table1(args) -> dict:
    tags = [args.tag] if args.tag else list(TAGS)
    out = {}
    for tag in tags:
        M, S = table1_pair(tag)
        sign = ADJOINT_SIGN[tag]
        out[tag] = {"M": io.matrix_to_json(M), "S": io.matrix_to_json(S),
                    "I": [[0, sign], [-sign, 0]], "stability": STABILITY[tag]}
    return _ok(pairs=out)


def cmd_mf_verify(args) -> dict:
    rep = mf_verify(io.mf_from_json(io.load_json(args.input))).to_dict()
    return (_ok if rep["ok"] else _fail)(report=rep)


def cmd_mf_build(args) -> dict:
    t = mf_from_pfaffian(_matrix(args.input, True))
    return _ok(triple=io.mf_to_json(t))


def cmd_mf_act(args) -> dict:
    g = io.gamma_from_json(io.load_json(args.gamma))
    t = io.mf_from_json(io.load_json(args.input))
    moved = gamma_apply(g, t)
    before, after = mf_verify(t).ok, mf_verify(moved).ok
    return (_ok if before == after else _fail)(
        triple=io.mf_to_json(moved), verified_before=before, verified_after=after)


def cmd_mf_normalize(args) -> dict:
    t = io.mf_from_json(io.load_json(args.input))
    res = mf_normalize_caseA(t, extension=args.extension is not None)
    return _ok(gamma=io.gamma_to_json(res.gamma), triple=io.mf_to_json(res.triple),
               **{"lambda": str(res.lam), "b_scale": str(res.b_scale)})


def cmd_mf_caseb(args) -> dict:
    rep = mf_caseB_check(io.mf_from_json(io.load_json(args.input)))
    return (_ok if rep["ok"] else _fail)(report=rep)


def cmd_mf_psi(args) -> dict:
    t = io.mf_from_json(io.load_json(args.input))
    witness = None
    if args.witness:
        witness = io.qmatrix_from_json(io.load_json(args.witness), t.n_vars)
    a1, F, rep = psi(t, witness)
    outcome = rep.pop("status")
    rep["outcome"] = outcome
    body = {"A1": io.matrix_to_json(a1), "F": str(F), "report": rep}
    return (_fail if outcome == "fail" else _ok)(**body)


def cmd_skewcong(args) -> dict:
    M, A, B = io.instance_from_json(io.load_json(args.input))
    S = skew_congruence_witness(M, A, B, extension=args.extension, sign=-1 if args.negative else 1)
    return _ok(S=io.qmatrix_to_json(S), verified=True)


def cmd_check(args) -> dict:
    seed = 0 if args.seed is None else args.seed
    summary = SUITES[args.suite](args.samples, seed)
    return (_ok if summary["failed"] == 0 else _fail)(summary=summary)


def cmd_generate(args) -> dict:
    seed = 0 if args.seed is None else args.seed
    rng = random.Random(seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for i in range(args.count):
        if args.kind == "congruence":
            inst = congruence_instance(rng, size=rng.choice([4, 6]), random_a=i % 4 == 3)
            obj = io.instance_to_json(inst)
        else:
            obj = io.mf_to_json(mf_from_pfaffian(random_nonzero_pfaffian(rng)))
        path = out / f"{args.kind}_{i:03d}.json"
        path.write_text(io.dumps(obj) + "\n", encoding="utf-8")
        written.append(path.name)
    return _ok(kind=args.kind, seed=seed, files=written)


BATCH_SUITES = {
    "classify": cmd_classify,
    "pf": cmd_pf,
    "mf-verify": cmd_mf_verify,
    "mf-caseb": cmd_mf_caseb,
    "mf-psi": cmd_mf_psi,
    "skewcong": cmd_skewcong,
}


def cmd_batch(args) -> dict:
    d = Path(args.directory)
    if not d.is_dir():
        raise io.InputError(f"{d} is not a readable directory")
    handler = BATCH_SUITES[args.suite]
    results = []
    for path in sorted(d.glob("*.json")):
        sub = argparse.Namespace(**{**vars(args), "input": str(path), "witness": None,
                                    "negative": False})
        report = run(handler, sub)
        results.append({"file": path.name, **report})
    counts = {s: sum(r["status"] == s for r in results) for s in ("ok", "fail", "error")}
    status = "ok" if counts["fail"] == counts["error"] == 0 else "fail"
    return {"status": status, "suite": args.suite, "instances": len(results),
            "counts": counts, "results": results}


# ---------------------------------------------------------------------------
# plumbing

INPUT_ERRORS = (io.InputError, NotSkewError, ShapeError, GradingError, HomogeneityError,
                MFError, HypothesisError, SpectrumError, NotASquareError)


def run(handler, args) -> dict:
    """Run a handler and turn every outcome into a report with a status field."""
    try:
        return handler(args)
    except BlockVanishingError as exc:
        return {"status": "fail", "error": {"type": type(exc).__name__, "message": str(exc)}}
    except INPUT_ERRORS as exc:
        return {"status": "error", "error": {"type": type(exc).__name__, "message": str(exc)}}


def build_parser() -> argparse.ArgumentParser:
    common = JsonArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized commands")
    common.add_argument("--extension", type=int, default=argparse.SUPPRESS, metavar="D",
                        help="allow square roots in Q(sqrt(D))")
    common.add_argument("--degree", type=int, default=argparse.SUPPRESS,
                        help="degree for graded computations")
    common.add_argument("--format", choices=("json", "pretty"), default=argparse.SUPPRESS)

    parser = JsonArgumentParser(prog="pfaffmf", parents=[common],
                                     description="Exact Pfaffian and matrix-factorization tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, inputs=("input",), parent=sub):
        p = parent.add_parser(name, parents=[common], help=help_text)
        for arg in inputs:
            p.add_argument(arg)
        p.set_defaults(handler=handler)
        return p

    add("pf", cmd_pf, "Pfaffian of a skew matrix")
    add("adjpf", cmd_adjpf, "Pfaffian adjoint of a skew 6x6 matrix")
    add("subpf", cmd_subpf, "4x4 sub-Pfaffians of a skew 6x6 matrix")
    add("syz", cmd_syz, "graded syzygies (default degree 1)")
    add("minors", cmd_minors, "2x2 minors of a k x 2 matrix")
    add("classify", cmd_classify, "normal-form class of a skew 6x6 linear matrix")
    p = add("table1", cmd_table1, "emit the six built-in normal-form pairs", inputs=())
    p.add_argument("--tag", choices=TAGS)

    mf = sub.add_parser("mf", help="matrix factorizations")
    mfsub = mf.add_subparsers(dest="mf_command", required=True)
    add("verify", cmd_mf_verify, "check the factorization axioms", parent=mfsub)
    add("build", cmd_mf_build, "normal-form triple from a matrix with Pf != 0", parent=mfsub)
    add("act", cmd_mf_act, "apply a group element", inputs=("gamma", "input"), parent=mfsub)
    add("normalize", cmd_mf_normalize, "case-(A) normal form", parent=mfsub)
    add("caseb", cmd_mf_caseb, "structure checks when B0 = 0", parent=mfsub)
    p = add("psi", cmd_mf_psi, "the pair (A1, F) and its consistency report", parent=mfsub)
    p.add_argument("--witness", help="constant matrix g with g^t A1 g in normal form")

    p = add("skewcong", cmd_skewcong, "constant S with A^-1 M B = S^t M S")
    p.add_argument("--negative", action="store_true", help="use the negative square roots")

    p = add("check", cmd_check, "randomized property suite", inputs=())
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--samples", type=int, default=20)

    p = add("generate", cmd_generate, "write random instance files", inputs=())
    p.add_argument("kind", choices=("congruence", "mf"))
    p.add_argument("out")
    p.add_argument("--count", type=int, default=20)

    p = add("batch", cmd_batch, "run one command over every *.json in a directory",
            inputs=("directory",))
    p.add_argument("--suite", choices=sorted(BATCH_SUITES), default="classify")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("seed", "extension", "degree"):
        if not hasattr(args, name):
            setattr(args, name, None)
    if not hasattr(args, "format"):
        args.format = "json"
    report = run(args.handler, args)
    sys.stdout.write(io.dumps(report, pretty=args.format == "pretty") + "\n")
    return EXIT[report["status"]]


if __name__ == "__main__":
    sys.exit(main())
