"""End-to-end drive of every CLI subcommand, exit code, and determinism claim.

Run from the repository root: python3 scripts/cli_e2e.py
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

FIX = "src/espectra/fixtures/tangent_ternary_cubic.json"
SYS = "src/espectra/fixtures/tangent_ternary_cubic_system.json"


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "espectra.cli", *args],
        capture_output=True,
        text=True,
    )


def to_file(tmp: Path, name: str, text: str) -> str:
    path = tmp / name
    path.write_text(text)
    return str(path)


def lamset(outputs):
    return sorted(
        (round(float(q["lam"]["re"]), 6), round(float(q["lam"]["im"]), 6))
        for q in outputs["pairs"]
    )


def main() -> None:
    tmp = Path(tempfile.mkdtemp())

    # eigen on the deficient cubic: 6 classes, no failures, exit 0
    p = run("eigen", "--input", FIX, "--seed", "0")
    assert p.returncode == 0, p.stderr
    o = json.loads(p.stdout)["outputs"]
    assert o["count"] == 6 and o["deficient"] and not o["failures"], o
    print("eigen fixture: OK")

    p2 = run("eigen", "--input", FIX, "--seed", "0")
    assert json.loads(p2.stdout)["outputs"] == o, "eigen output not deterministic"
    print("eigen determinism: OK")

    # binary quartic: binary and charpoly routes agree
    p = run("generate", "--kind", "random", "--n", "1", "--d", "4", "--seed", "5")
    assert p.returncode == 0, p.stderr
    quartic = to_file(tmp, "quartic.json", p.stdout)
    p = run("eigen", "--input", quartic, "--method", "binary", "--seed", "1")
    assert p.returncode == 0, p.stderr
    ob = json.loads(p.stdout)["outputs"]
    assert ob["count"] == ob["eigen_count_expected"] == 4, ob
    p = run("eigen", "--input", quartic, "--method", "charpoly", "--seed", "1")
    assert p.returncode == 0, p.stderr
    oc = json.loads(p.stdout)["outputs"]
    assert lamset(ob) == lamset(oc), (lamset(ob), lamset(oc))
    print("eigen binary vs charpoly: OK")

    # fermat route on a generated diagonal cubic
    p = run("generate", "--kind", "fermat", "--n", "2", "--d", "3", "--seed", "7")
    assert p.returncode == 0, p.stderr
    fer = to_file(tmp, "fermat.json", p.stdout)
    p = run("eigen", "--input", fer, "--method", "fermat")
    assert p.returncode == 0, p.stderr
    of = json.loads(p.stdout)["outputs"]
    assert of["count"] == 7 and not of["failures"], of
    print("eigen fermat: OK")

    # diagonal quadric: n + 1 rows
    p = run("generate", "--kind", "fermat", "--n", "2", "--d", "2", "--seed", "3")
    assert p.returncode == 0, p.stderr
    quad = to_file(tmp, "quadric.json", p.stdout)
    p = run("eigen", "--input", quad, "--method", "charpoly")
    assert p.returncode == 0, p.stderr
    oq = json.loads(p.stdout)["outputs"]
    assert oq["count"] == 3 and not oq["failures"], oq
    print("eigen quadric: OK")

    # echar on the committed system file: degree 12, deficient
    p = run("echar", "--input", SYS)
    assert p.returncode == 0, p.stderr
    oe = json.loads(p.stdout)["outputs"]
    assert oe["degree"] == 12 and oe["deficient"], oe
    p2 = run("echar", "--input", SYS)
    assert json.loads(p2.stdout)["outputs"] == oe
    print("echar system fixture + determinism: OK")

    # echar identically-zero case: the square of the quadric norm
    iso = {
        "n": 2,
        "d": 4,
        "coeffs": [
            {"exp": [4, 0, 0], "re": "1", "im": "0"},
            {"exp": [0, 4, 0], "re": "1", "im": "0"},
            {"exp": [0, 0, 4], "re": "1", "im": "0"},
            {"exp": [2, 2, 0], "re": "2", "im": "0"},
            {"exp": [2, 0, 2], "re": "2", "im": "0"},
            {"exp": [0, 2, 2], "re": "2", "im": "0"},
        ],
    }
    isof = to_file(tmp, "iso.json", json.dumps(iso))
    p = run("echar", "--input", isof)
    assert p.returncode == 0, p.stderr
    oi = json.loads(p.stdout)["outputs"]
    assert oi["identically_zero"], oi
    print("echar identically zero: OK")

    # verify on the deficient cubic: HYPOTHESIS_FAILED with a certificate
    p = run("verify", "--input", FIX)
    assert p.returncode == 0, p.stderr
    ov = json.loads(p.stdout)["outputs"]
    assert ov["verdict"] == "HYPOTHESIS_FAILED" and ov["certificate"], ov
    print("verify deficient: OK")

    # verify suites
    p = run("verify", "--suite", "1,4", "--samples", "4", "--seed", "3")
    assert p.returncode == 0, p.stderr
    osu = json.loads(p.stdout)["outputs"]
    assert all(s["verdict"] == "PASS" for s in osu["verdicts"]), osu
    assert osu["constant_agrees"], osu
    print("verify suite (1,4): OK")

    p = run("verify", "--suite", "2,3", "--samples", "3", "--seed", "11")
    assert p.returncode == 0, p.stderr
    os2 = json.loads(p.stdout)["outputs"]
    assert all(s["verdict"] == "PASS" for s in os2["verdicts"]), os2
    print("verify suite (2,3): OK")

    p = run("verify", "--suite", "1,2", "--samples", "3", "--seed", "2")
    assert p.returncode == 0, p.stderr
    os3 = json.loads(p.stdout)["outputs"]
    assert all(s["verdict"] == "PASS" for s in os3["verdicts"]), os3
    print("verify suite (1,2): OK")

    # invariants
    p = run("invariants", "--n", "2", "--d", "3")
    assert p.returncode == 0, p.stderr
    on = json.loads(p.stdout)["outputs"]
    assert on["eigen_count"] == 7 and on["phi"] == 5 and on["delta0"] == 10, on
    print("invariants: OK")

    # generate determinism + tangent round-trip deficiency
    a = run("generate", "--kind", "tangent", "--n", "2", "--d", "3", "--seed", "9")
    b = run("generate", "--kind", "tangent", "--n", "2", "--d", "3", "--seed", "9")
    assert a.returncode == 0 and a.stdout == b.stdout
    tang = to_file(tmp, "tangent.json", a.stdout)
    p = run("echar", "--input", tang)
    assert p.returncode == 0, p.stderr
    og = json.loads(p.stdout)["outputs"]
    assert og["deficient"], og
    print("generate tangent round-trip: OK")

    # tangent binary quartic has exact b0 = 0
    p = run("generate", "--kind", "tangent", "--n", "1", "--d", "4", "--seed", "7")
    assert p.returncode == 0, p.stderr
    tb = to_file(tmp, "tangent_binary.json", p.stdout)
    p = run("verify", "--input", tb)
    assert p.returncode == 0, p.stderr
    ovb = json.loads(p.stdout)["outputs"]
    assert ovb["verdict"] == "HYPOTHESIS_FAILED", ovb
    print("tangent binary: OK")

    # error exits
    p = run("eigen", "--input", "no_such_file.json")
    assert p.returncode == 2, p.returncode
    p = run("nonsense")
    assert p.returncode == 2, p.returncode
    bad = to_file(tmp, "bad.json", "{bad json")
    p = run("eigen", "--input", bad)
    assert p.returncode == 2, p.returncode
    p = run("generate", "--kind", "tangent", "--n", "3", "--d", "3", "--seed", "1")
    assert p.returncode == 2, p.returncode
    print("error exits: OK")

    print("ALL CLI CHECKS PASSED")


if __name__ == "__main__":
    main()
