#!/usr/bin/env python3
"""Smoke tests for the qrac python module."""

import math
import sys

import qrac


def approx(a, b, eps=1e-9):
    return abs(a - b) < eps


def main():
    # Headline values of the three named codings.
    amb = qrac.evaluate_builtin("ambainis2")
    assert approx(amb["worst_case_p"], math.cos(math.pi / 8) ** 2), amb
    chu = qrac.evaluate_builtin("chuang3")
    assert approx(chu["worst_case_p"], 0.5 + math.sqrt(3) / 6), chu
    hin = qrac.evaluate_builtin("hinry7")
    assert approx(hin["worst_case_p"], (9 + 2 * math.sqrt(3)) / 23, 1e-6), hin
    ex3 = qrac.evaluate_builtin("example3")
    assert ex3["worst_case_p"] <= 0.5 + 1e-9, ex3

    # Pauli triple and Bloch round trip.
    basis = qrac.gell_mann_basis(2)
    assert len(basis) == 3
    assert basis[2][0][0] == 1 and basis[2][1][1] == -1  # Z
    amps = qrac.encode_chuang3("000")
    rho = [[a * b.conjugate() for b in amps] for a in amps]
    r = qrac.density_to_bloch(rho)
    assert all(approx(c, 1 / math.sqrt(3)) for c in r), r
    back = qrac.bloch_to_density(2, r)
    assert all(abs(back[i][j] - rho[i][j]) < 1e-10 for i in range(2) for j in range(2))

    # Cloner: 2/3 marginal shrink shows up as <0|rho1|0> = 2/3 * 1 + 1/6.
    zero = [[1.0, 0.0], [0.0, 0.0]]
    joint = qrac.buzek_hillery_clone(zero)
    rho1_00 = joint[0][0] + joint[1][1]
    assert approx(rho1_00.real, 5 / 6), joint

    # Geometry: counting bound and realized regions.
    assert qrac.max_regions(4, 3) == 15
    assert qrac.max_regions(16, 15) == 65535
    assert qrac.realized_pattern_count("chuang3") == 8
    nogo = qrac.no_go_builtin("example3", 0.55)
    assert nogo["refuted"] and nogo["max_regions"] == 15, nogo

    # Nayak bound.
    assert approx(qrac.nayak_bound(4, 0.5), 0.0)
    assert qrac.nayak_bound(4, 0.51) < 1.0

    # A tiny see-saw run.
    res = qrac.see_saw(2, 1, seed=5, restarts=3, max_iters=150, reweight_rounds=5)
    assert res["worst_case_p"] > 0.85, res

    # Error mapping.
    try:
        qrac.nayak_bound(4, 1.5)
        raise AssertionError("expected ValueError")
    except ValueError:
        pass

    print("python smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
