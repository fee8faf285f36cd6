"""Regenerate the files under instances/ (deterministic)."""

import subprocess
import sys
from pathlib import Path

from pfaffmf import io
from pfaffmf.mf import GammaElement, mf_from_pfaffian
from pfaffmf.ring import QMatrix
from pfaffmf.samples import case_b_triple
from pfaffmf.skew import PolyMatrix
from pfaffmf.table import TAGS, table1_matrix

ROOT = Path(__file__).resolve().parent.parent / "instances"


def write(path: Path, obj):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(io.dumps(obj) + "\n", encoding="utf-8")


def main():
    m = PolyMatrix([
        ["0", "x0", "0", "x3", "0", "0"],
        ["-x0", "0", "0", "0", "x4", "0"],
        ["0", "0", "0", "x1", "0", "x0 + x3"],
        ["-x3", "0", "-x1", "0", "0", "0"],
        ["0", "-x4", "0", "0", "0", "x2"],
        ["0", "0", "-x0 - x3", "0", "-x2", "0"],
    ])
    write(ROOT / "caseA_matrix.json", io.matrix_to_json(m))
    write(ROOT / "caseA.json", io.mf_to_json(mf_from_pfaffian(m)))
    for tag in TAGS:
        write(ROOT / "table1" / f"table1_{tag}.json", io.matrix_to_json(table1_matrix(tag)))
    write(ROOT / "caseB_e.json", io.mf_to_json(case_b_triple("e")))
    u = PolyMatrix([["x1", "0", "0", "x2", "0", "0"], ["0", "x0", "0", "0", "0", "x4"]])
    write(ROOT / "gamma_unipotent.json",
          io.gamma_to_json(GammaElement(QMatrix.identity(2), u, QMatrix.identity(6))))
    write(ROOT / "not_skew.json", {"rows": [["0", "x0"], ["x0", "0"]]})
    write(ROOT / "skewcong_small.json",
          {"M": {"rows": [["0", "1"], ["-1", "0"]]}, "A": {"rows": [["1", "0"], ["0", "1"]]},
           "B": {"rows": [["4", "0"], ["0", "4"]]}})
    subprocess.run([sys.executable, "-m", "pfaffmf", "generate", "congruence",
                    str(ROOT / "congruence"), "--count", "20", "--seed", "7"],
                   check=True, stdout=subprocess.DEVNULL)
    report = subprocess.run([sys.executable, "-m", "pfaffmf", "mf", "verify",
                             str(ROOT / "caseA.json"), "--seed", "0"],
                            check=True, capture_output=True, text=True).stdout
    (ROOT / "caseA.verify.json").write_text(report, encoding="utf-8")


if __name__ == "__main__":
    main()
