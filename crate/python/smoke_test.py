"""Smoke test for the divlab Python extension.

Build first with ``cargo build -p divlab-python``; the script loads
``target/debug/libdivlab.so`` (override with ``DIVLAB_LIB``).
"""

import importlib.machinery
import importlib.util
import os
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    default = ROOT / "target" / "debug" / "libdivlab.so"
    path = pathlib.Path(os.environ.get("DIVLAB_LIB", default))
    if not path.exists():
        sys.exit(f"{path} not found; run `cargo build -p divlab-python` first")
    loader = importlib.machinery.ExtensionFileLoader("divlab", str(path))
    spec = importlib.util.spec_from_file_location("divlab", path, loader=loader)
    module = importlib.util.module_from_spec(spec)
    loader.exec_module(module)
    return module


def main():
    dl = load()

    sy, sz = dl.ExpVec("X*Y*U"), dl.ExpVec("X*Z*U")
    b1 = dl.ExpVec("X*U*T[1]^(-1)")
    assert b1.mcd_verify(sy, sz) == "maximal"
    assert dl.ExpVec("X^(1/2)").mcd_verify(sy, sz) != "maximal"
    assert b1.in_qr() and not dl.ExpVec("T[1]").in_qr()
    assert b1.divides(sy) and sy.min(sz) == dl.ExpVec("X*U")

    f = dl.AlgElem("X*Y + X^(1/2)*T[2] + 1")
    g = dl.AlgElem("Y^(1/3) + X*U")
    assert (f * g).exact_div(f) == g
    assert f.square().sqrt() == f
    h, k = f.antimatter_factor()
    assert h * k == f and f.in_r() and len(f) == 3
    assert f.claim_check(g) in ("holds", "not-applicable")
    try:
        g.exact_div(f)
    except ValueError:
        pass
    else:
        raise AssertionError("g is not a multiple of f")

    two, s, t = dl.QuadInt(2, 0), dl.QuadInt(1, 1), dl.QuadInt(1, -1)
    assert (s * t) == dl.QuadInt(6, 0) and two.divides(s * t)
    assert not two.divides(s) and not two.is_unit() and two.norm() == "4"
    assert [str(d) for d in two.divisors()] == ["1", "2"]

    assert dl.parse_expr("Y*X + X*Y*U", "r") == dl.parse_expr("X*Y*U + X*Y", "r")
    code, verdict = dl.check("aq", "z5", ["2", "1+1i5", "1-1i5"])
    assert code == 1 and verdict["verdict"] == "violation"
    code, verdict = dl.check("prime-like", "dk", ["6", "2*x + 4", "3*x + 3"])
    assert code == 0 and verdict["case"] == "Case2_1Constant"

    for name in ("mcd-infinite", "idf-fails", "x-not-primal", "aq-z5", "gauss-fails-z5"):
        report = dl.run_witness(name)
        assert report["verdict"] == "Reproduced", report
    summary = dl.fuzz("sqrt", 200, 7)
    assert summary["failed"] == 0 and summary["passed"] == 200

    print("python smoke test passed")


if __name__ == "__main__":
    main()
