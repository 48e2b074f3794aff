#!/usr/bin/env python3
"""Smoke test for the dspan_py extension module.

Builds are produced by `cargo build -p dspan-py [--release]`; this script
locates the compiled library, imports it, and exercises the main types
and operations against known values.
"""
import math
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def import_module():
    candidates = [
        ROOT / "target" / "release" / "libdspan_py.so",
        ROOT / "target" / "debug" / "libdspan_py.so",
        ROOT / "target" / "release" / "libdspan_py.dylib",
        ROOT / "target" / "debug" / "libdspan_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "dspan_py library not found; run `cargo build -p dspan-py` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="dspan-py-"))
    shutil.copy(built, stage / "dspan_py.so")
    sys.path.insert(0, str(stage))
    import dspan_py

    return dspan_py


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} vs {b}"


def main():
    m = import_module()
    print(f"dspan_py {m.__version__}")

    # generators and metric queries
    g11 = m.PointSet.grid_1d(11)
    assert len(g11) == 11 and g11.dim == 1
    approx(g11.min_pairwise_distance(), 0.2, 1e-12)

    z_geo = m.PointSet.geometric_set(0.5, 3)
    assert z_geo.points() == [[1.0], [0.5], [0.25]]

    sub = g11.dense_subset(0.4)
    assert len(sub) <= 6

    # JSON round trip
    back = m.PointSet.from_json(g11.to_json())
    assert back.points() == g11.points()

    # covering machinery
    assert m.covering_number_1d(g11, 0.5) == 4
    assert m.packing_number(g11, 0.2) == 6
    profile = m.covering_profile_1d(g11)
    assert profile[0][0] == 11 and profile[-1][0] == 1
    g2 = m.PointSet.grid_nd(2, 3)
    assert m.covering_bounds(g2, 1.0) == (4, 4)

    # span and the bound chain
    omega_lo, omega_hi, witness, attained = m.omega(g11, 3)
    approx(omega_lo, 1.6, 1e-12)
    approx(witness, 0.2, 1e-12)
    assert omega_lo == omega_hi and not attained

    approx(m.chebyshev(3, 1.5), 9.0, 1e-10)
    approx(m.chebyshev(3, 2.0), 26.0, 1e-10)
    _, lam, factor = m.span_bound(g11, 3)
    approx(lam, 0.8, 1e-12)
    approx(factor, 9.0, 1e-9)
    approx(m.grid_product_bound(2, 11, 3), 81.0, 1e-7)
    approx(m.vitushkin_eval(2, 3, 0.1), 265.0, 1e-9)

    # exact oracle and cross-oracle
    three = m.PointSet(1, [-1.0], [1.0], [[-1.0], [0.0], [1.0]])
    assert m.is_d_definite(three, 2)
    value, probe, res = m.exact_remez_span(three, 2)
    approx(value, 1.25, 1e-6)
    approx(abs(probe[0]), 0.5, 1e-9)
    assert res == 513
    approx(m.lebesgue_oracle(three, 2), value, 1e-9)

    # the oracle never exceeds the chain bound
    passed, max_ratio, violations = m.falsify(g11, 3, factor, trials=2000)
    assert passed and violations == 0 and max_ratio <= factor

    # interpolation bounds
    approx(m.favard_subset_value([1.0, 0.5, 1.0 / 3.0]), 24.0, 1e-9)
    approx(m.favard_subset_value([-1.0, 0.0, 1.0]), 2.0, 1e-12)
    fav, exact_mode = m.favard_bound(m.PointSet.power_set(1.0, 3), 2)
    approx(fav, 24.0, 1e-9)
    assert exact_mode

    # sub-level measure: |2x| <= 1 on [-1, 1]
    approx(m.sublevel_measure_1d([0.0, 2.0], -1.0, 1.0, 1.0), 1.0, 1e-9)

    # spread machinery
    z3 = m.PointSet(1, [-1.0], [1.0], [[0.0], [0.5], [1.0]])
    v_lo, v_hi, exact_mode = m.beta_spread(z3, 2.0)
    approx(v_lo, 1.0, 1e-12)
    assert exact_mode
    g5 = m.PointSet.grid_1d(5)
    assert m.eta(g5, 3) == (1.0, 1.0)
    approx(m.mst_weight(z3), 1.0, 1e-12)
    approx(m.zeta(2.0), math.pi**2 / 6.0, 1e-9)
    approx(m.zeta(4.0), 1.082323233711138, 1e-9)

    print("smoke test OK")


if __name__ == "__main__":
    main()
