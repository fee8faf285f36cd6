"""JSON formats for matrices, triples, group elements and congruence instances.

Matrix: {"rows": [[poly, ...], ...], "grading": {"source": [...], "target": [...]}}
Triple: {"A3", "A2", "A1", "B0", "B1", "B2": matrix, "F": poly}
Gamma:  {"g2": matrix, "u": matrix, "g6": matrix}
Congruence instance: {"M": matrix, "A": matrix, "B": matrix}
Any object may carry "n_vars" (default 5).
"""

from __future__ import annotations

import json
from pathlib import Path

from .congruence import CongruenceInstance
from .mf import GammaElement, MFTriple
from .ring import N_VARS, PolySyntaxError, QMatrix, parse_poly
from .skew import PolyMatrix


class InputError(ValueError):
    """Malformed input file or object."""


def load_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected a JSON object")
    return obj


def _n_vars(obj: dict, default: int = N_VARS) -> int:
    n = obj.get("n_vars", default)
    if not isinstance(n, int) or n < 1:
        raise InputError("n_vars must be a positive integer")
    return n


def matrix_to_json(m: PolyMatrix) -> dict:
    out = {"rows": m.to_strings()}
    if m.grading is not None:
        out["grading"] = {"source": list(m.grading[0]), "target": list(m.grading[1])}
    return out


def qmatrix_to_json(m: QMatrix) -> dict:
    return {"rows": m.to_lists()}


def matrix_from_json(obj, n_vars: int = N_VARS) -> PolyMatrix:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise InputError("a matrix needs a \"rows\" field")
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("\"rows\" must be a list of lists")
    n_vars = _n_vars(obj, n_vars)
    grading = None
    if "grading" in obj:
        g = obj["grading"]
        if not isinstance(g, dict) or "source" not in g or "target" not in g:
            raise InputError("grading needs \"source\" and \"target\"")
        grading = (g["source"], g["target"])
    try:
        return PolyMatrix([[str(x) for x in r] for r in rows], grading=grading, n_vars=n_vars)
    except PolySyntaxError as exc:
        raise InputError(f"bad polynomial: {exc}") from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def qmatrix_from_json(obj, n_vars: int = N_VARS) -> QMatrix:
    m = matrix_from_json(obj, n_vars)
    if not m.is_constant():
        raise InputError("expected a matrix of constants")
    return m.to_qmatrix()


def poly_from_json(text, n_vars: int = N_VARS):
    try:
        return parse_poly(str(text), n_vars)
    except ValueError as exc:
        raise InputError(f"bad polynomial: {exc}") from exc


def mf_to_json(t: MFTriple) -> dict:
    out = {k: matrix_to_json(getattr(t, k)) for k in ("A3", "A2", "A1", "B0", "B1", "B2")}
    out["F"] = str(t.F)
    if t.n_vars != N_VARS:
        out["n_vars"] = t.n_vars
    return out


def mf_from_json(obj: dict) -> MFTriple:
    n = _n_vars(obj)
    missing = [k for k in ("A3", "A2", "A1", "B0", "B1", "B2", "F") if k not in obj]
    if missing:
        raise InputError(f"triple is missing {', '.join(missing)}")
    blocks = {k: matrix_from_json(obj[k], n) for k in ("A3", "A2", "A1", "B0", "B1", "B2")}
    try:
        return MFTriple(F=poly_from_json(obj["F"], n), **blocks)
    except (ValueError, TypeError) as exc:
        raise InputError(f"invalid triple: {exc}") from exc


def gamma_to_json(g: GammaElement) -> dict:
    return {"g2": qmatrix_to_json(g.g2), "u": matrix_to_json(g.u), "g6": qmatrix_to_json(g.g6)}


def gamma_from_json(obj: dict) -> GammaElement:
    n = _n_vars(obj)
    missing = [k for k in ("g2", "u", "g6") if k not in obj]
    if missing:
        raise InputError(f"gamma is missing {', '.join(missing)}")
    try:
        return GammaElement(qmatrix_from_json(obj["g2"], n), matrix_from_json(obj["u"], n),
                            qmatrix_from_json(obj["g6"], n))
    except (ValueError, TypeError) as exc:
        raise InputError(f"invalid gamma: {exc}") from exc


def instance_to_json(inst: CongruenceInstance) -> dict:
    return {"M": matrix_to_json(inst.M), "A": qmatrix_to_json(inst.A),
            "B": qmatrix_to_json(inst.B), "S0": qmatrix_to_json(inst.S0)}


def instance_from_json(obj: dict):
    """(M, A, B) from a congruence instance object; A defaults to the identity."""
    n = _n_vars(obj)
    if "M" not in obj or "B" not in obj:
        raise InputError("congruence instance needs \"M\" and \"B\"")
    M = matrix_from_json(obj["M"], n)
    B = qmatrix_from_json(obj["B"], n)
    A = qmatrix_from_json(obj["A"], n) if "A" in obj else QMatrix.identity(B.rows)
    if not (M.rows == M.cols == A.rows == A.cols == B.rows == B.cols):
        raise InputError("M, A and B must be square of one size")
    return M, A, B


def dumps(obj, pretty: bool = False) -> str:
    """Indented JSON with lists of scalars kept on one line; ``pretty`` gives plain text."""
    if pretty:
        return "\n".join(_render(obj, 0))
    return _dump(obj, 0)


def _dump(obj, depth: int) -> str:
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_dump(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        items = [inner + _dump(v, depth + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def _render(obj, depth):
    pad = "  " * depth
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                yield f"{pad}{k}:"
                yield from _render(v, depth + 1)
            else:
                yield f"{pad}{k}: {_flat(v)}"
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _is_flat(v):
                yield f"{pad}-"
                yield from _render(v, depth + 1)
            else:
                yield f"{pad}- {_flat(v)}"
    else:
        yield f"{pad}{_flat(obj)}"


def _is_flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return not isinstance(v, dict)


def _flat(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_flat(x) for x in v) + "]"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)
