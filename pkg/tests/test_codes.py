"""Evaluation codes: construction, exact distance, duals, bounds, orbits."""

import itertools
import math
import random

import pytest

from ordercodes import (
    ResourceLimit,
    build_field,
    c_a_code,
    distance_interval,
    dual_code,
    evaluation_code,
    first_ell_code,
    griesmer_bound,
    hermitian_predicted_params,
    hermitian_tangent_variety,
    hermitian_variety,
    min_distance,
    orbit_decomposition,
    rational_points,
)
from ordercodes.varieties import PointSet


def brute_force_distance(C):
    """Oracle: iterate every nonzero message vector without pruning."""
    F = C.field
    best = C.n
    for msg in itertools.product(range(F.q), repeat=C.k):
        if not any(msg):
            continue
        word = [0] * C.n
        for c, row in zip(msg, C.generator):
            if c:
                for j, g in enumerate(row):
                    word[j] = F.add_c(word[j], F.mul_c(c, g))
        best = min(best, sum(1 for x in word if x))
    return best


def test_repetition_code(herm22_points):
    F = herm22_points.field
    C = evaluation_code(herm22_points, [(0, 0, 0)], F)
    assert C.k == 1
    assert C.n == len(herm22_points)
    assert C.matrix[0] == [1] * C.n
    assert min_distance(C) == C.n


def test_c0_is_repetition(herm22, herm22_points):
    C = c_a_code(herm22, herm22_points, 0)
    assert C.k == 1


def test_c1_equals_first_ell(herm22, herm22_points):
    # for a <= q the degree filter picks exactly the first binom(a+r+1, a)
    # monomials under the weight order
    r, q = 2, 2
    for a in range(0, q + 1):
        Ca = c_a_code(herm22, herm22_points, a)
        ell = math.comb(a + r + 1, a)
        Cl = first_ell_code(herm22, herm22_points, ell)
        assert Ca.monomials == Cl.monomials


def test_c1_table_row(herm22, herm22_points):
    C = c_a_code(herm22, herm22_points, 1)
    assert (C.n, C.k) == (36, 4)
    assert min_distance(C) == 24


def test_min_distance_against_unpruned_oracle():
    V = hermitian_variety(1, 2)  # 8 points over GF(4)
    P = V.presentation
    pts = rational_points(V)
    C = first_ell_code(P, pts, 3)
    assert min_distance(C) == brute_force_distance(C)


def test_min_distance_random_code_oracle():
    F = build_field(3, 1)
    rng = random.Random(11)
    pts = PointSet(F, 1, [(i,) for i in range(3)] * 3)  # 9 columns
    mons = [(0,), (1,), (2,)]
    C = evaluation_code(pts, mons, F)
    assert min_distance(C) == brute_force_distance(C)


def test_min_distance_ceiling():
    V = hermitian_variety(2, 2)
    pts = rational_points(V)
    C = c_a_code(V.presentation, pts, 1)
    with pytest.raises(ResourceLimit):
        min_distance(C, ceiling=10)
    lo, hi = distance_interval(C, samples=500, seed=0)
    assert lo <= 24 <= hi


def test_dual_code(herm22, herm22_points):
    C = c_a_code(herm22, herm22_points, 1)
    H = dual_code(C)
    assert len(H) == C.n - C.k == 32
    F = C.field
    for grow in C.generator:
        for hrow in H:
            acc = 0
            for a, b in zip(grow, hrow):
                acc = F.add_c(acc, F.mul_c(a, b))
            assert acc == 0


def test_dual_of_full_code():
    F = build_field(2, 2)
    pts = PointSet(F, 1, [(i,) for i in range(4)])
    C = evaluation_code(pts, [(0,), (1,), (2,), (3,)], F)
    assert C.k == 4
    assert dual_code(C) == []


def test_griesmer_bound_values():
    assert griesmer_bound(1, 9, 3) == 9
    assert griesmer_bound(4, 24, 4) == 24 + 6 + 2 + 1
    q = 2
    d = q**11 - q**9 - q**5 - q**4
    assert griesmer_bound(7, d, q**2) == 1986


def test_predicted_params():
    assert hermitian_predicted_params(2, 2) == (36, 4, 24)
    assert hermitian_predicted_params(3, 2) == (120, 5, 84)
    assert hermitian_predicted_params(4, 2) == (528, 6, 384)
    assert hermitian_predicted_params(2, 3) == (252, 4, 216)


@pytest.mark.parametrize("r,q", [(2, 2), (3, 2), (2, 3)])
def test_bounds_hold_on_constructed_codes(r, q):
    V = hermitian_variety(r, q)
    pts = rational_points(V)
    C = first_ell_code(V.presentation, pts, r + 2)
    d = min_distance(C)
    assert C.k + d <= C.n + 1  # Singleton
    assert griesmer_bound(C.k, d, C.field.q) <= C.n


def test_point_permutation_invariance(herm22):
    V = hermitian_variety(2, 2)
    pts = rational_points(V)
    rng = random.Random(3)
    perm = list(range(len(pts)))
    rng.shuffle(perm)
    shuffled = PointSet(pts.field, pts.dimension, [pts.points[i] for i in perm])
    C1 = c_a_code(herm22, pts, 1)
    C2 = c_a_code(herm22, shuffled, 1)
    assert (C1.n, C1.k) == (C2.n, C2.k)
    assert min_distance(C1) == min_distance(C2)
    # columns are permuted copies
    for r1, r2 in zip(C1.matrix, C2.matrix):
        assert sorted(r1) == sorted(r2)


@pytest.mark.parametrize("q", [2, 3])
def test_orbit_decomposition(q):
    V = hermitian_tangent_variety(2, q)
    pts = rational_points(V)
    od = orbit_decomposition(pts, q)
    # orbits partition the point set
    flat = sorted(i for orbit in od.orbits for i in orbit)
    assert flat == list(range(len(pts)))
    # orbit sizes divide the group order q^2 - 1
    assert all((q * q - 1) % size == 0 for size in od.histogram)
    # the predicted histogram
    expected = {q * q - 1: q**3 + q}
    expected[q - 1] = expected.get(q - 1, 0) + 1
    expected[1] = expected.get(1, 0) + 1
    assert od.histogram == expected
    # the total recovers the point count q^5
    assert sum(size * cnt for size, cnt in od.histogram.items()) == q**5


def test_orbit_total_formula():
    for q in (2, 3, 4, 5):
        assert (q**3 + q) * (q * q - 1) + (q - 1) + 1 == q**5


def test_code_json_round_trip(herm22, herm22_points):
    C = c_a_code(herm22, herm22_points, 1)
    C.d = min_distance(C)
    C.d_method = "exhaustive"
    obj = C.to_json()
    assert obj["params"]["n"] == 36
    assert obj["params"]["d"] == 24
    assert len(obj["G"]) == len(C.matrix)
