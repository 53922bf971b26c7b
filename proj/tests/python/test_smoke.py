"""Smoke tests for the python bindings (run by ctest with PYTHONPATH set)."""

import cmath
import math
import sys

import merodiff as md


def approx(a, b, tol=1e-10):
    return abs(a - b) <= tol * max(1.0, abs(b))


def main():
    # node generation
    nodes = md.segment_nodes(1 + 1j, 0.5, 1.0, 8)
    assert len(nodes) == 8
    assert approx(nodes[-1], 1 + 1j)

    eq = md.equispaced_periodic_nodes(4)
    assert approx(eq[-1], math.pi)

    # algebraic matrix differentiates z^2 exactly
    zs = [0j, 1 + 0j, 2 + 0j]
    d = md.algebraic_matrix(zs)
    assert d.basis == "algebraic" and d.order == 1
    df = d.apply([z * z for z in zs])
    assert all(approx(a, b) for a, b in zip(df, [0j, 2 + 0j, 4 + 0j]))

    # rational matrix is exact for 1/z
    dr = md.rational_matrix([1 + 0j, 2 + 0j], [(0j, 1)])
    got = dr.apply([1 + 0j, 0.5 + 0j])
    assert approx(got[0], -1) and approx(got[1], -0.25)

    # interpolation evaluators
    assert approx(md.lagrange_eval(zs, [z * z for z in zs], 0.5 + 0j), 0.25)

    # special functions
    assert approx(md.elliptic_K(0.5), 1.8540746773013719, 1e-14)
    sn, cn, dn = md.jacobi_sn_cn_dn(1.2 + 0.3j, 0.5)
    assert approx(sn * sn + cn * cn, 1, 1e-10)
    assert approx(md.kummer_M(2.5 + 0j, 2.5 + 0j, 1 + 1j), cmath.exp(1 + 1j), 1e-12)
    p = md.weierstrass_p(0.5 + 0.35j, 2 + 0j, 2j, 0)
    pp = md.weierstrass_p(0.5 + 0.35j, 2 + 0j, 2j, 1)
    assert approx(pp * pp, 4 * p**3 - 11.817045008077116 * p, 1e-8)

    # eigen solver on a diagonal matrix
    lam, vec, iters, residual = md.smallest_eigenpair(
        [[2 + 0j, 0j, 0j], [0j, 0.5 + 0j, 0j], [0j, 0j, 3j]]
    )
    assert approx(lam, 0.5) and approx(vec[1], 1)

    # experiment sweeps
    rows = md.table1_sweep(4, 8)
    assert rows[0][0] == 4 and abs(rows[0][1] - 0.657) < 0.05 * 0.657
    assert rows[-1][1] <= 1e-12

    jac = md.elliptic_sweep("jacobi", [7, 11])
    assert jac[1][1] < jac[0][1] <= 1e-3

    res = md.kummer_experiment(2.5 + 0j, basis="trigonometric")
    assert len(res["eigenvector"]) == 21
    assert res["residual"] <= 1e-6

    # validation errors surface as ValueError
    try:
        md.segment_nodes(1 + 1j, 1.0, 1.0, 5)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for a degenerate segment")

    print("python smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
