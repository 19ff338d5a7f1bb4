"""Weight machinery, two-condition verification, order functions, toric
ideals and deformations."""

import itertools

import pytest

from ordercodes import (
    MINUS_INFINITY,
    Lex,
    OrderValue,
    Presentation,
    Ring,
    axiom_probe,
    build_field,
    deform_to_toric,
    hermitian_presentation,
    hermitian_tangent_presentation,
    m_weight,
    rho,
    standard_monomials,
    toric_ideal,
    verify_gp,
)
from ordercodes.orderdomain import SemigroupData, semigroup_membership


def test_m_weight():
    M = [[1, 1, 1], [3, 0, 2]]
    assert m_weight((1, 2, 0), M) == (3, 3)
    assert m_weight((0, 0, 0), M) == (0, 0)


def test_order_value_compare():
    a, b = OrderValue((1, 2)), OrderValue((1, 3))
    assert a < b
    assert MINUS_INFINITY < a
    assert not (MINUS_INFINITY < MINUS_INFINITY)
    assert (a + b).value == (2, 5)
    assert (a + MINUS_INFINITY).is_minus_infinity


def test_semigroup_membership():
    S = SemigroupData.from_matrix([[3, 2]])
    assert semigroup_membership((0,), S) == [0, 0]
    assert semigroup_membership((7,), S) == [1, 2]
    assert semigroup_membership((1,), S) is None
    # oracle: exhaustive small-range comparison with direct enumeration
    reachable = {3 * i + 2 * j for i in range(6) for j in range(9)}
    for v in range(16):
        got = semigroup_membership((v,), S)
        assert (got is not None) == (v in reachable)
        if got is not None:
            assert 3 * got[0] + 2 * got[1] == v


def test_verify_gp_passes_hermitian(herm22):
    report = herm22.report
    assert report.passed
    assert report.gb_size == 1
    # exactly two max-weight monomials in the single GB element
    assert len(report.tie_pairs[0]) == 2


def test_verify_gp_fails_on_unit_hyperbola():
    # XY - 1 has a single max-weight monomial under any positive weighting:
    # the documented failure witness for condition (a)
    R = Ring(build_field(2, 2), ["X", "Y"])
    X, Y = R.gens()
    P = Presentation(R, [X * Y - 1], [[1, 1]], tau=Lex())
    report = verify_gp(P)
    assert not report.passed
    assert report.condition_a_failures
    idx, monos = report.condition_a_failures[0]
    assert len(monos) == 1  # single max-weight monomial


def test_verify_gp_condition_b_failure():
    # weight matrix [[1, 1]] on a principal ideal whose footprint keeps both
    # variables: X and Y tie at weight 1
    R = Ring(build_field(5, 1), ["X", "Y"])
    X, Y = R.gens()
    P = Presentation(R, [X**3 - Y**2 + X * Y], [[1, 1]], tau=Lex())
    report = verify_gp(P)
    assert not report.passed
    assert report.condition_b_witness is not None
    a, b = report.condition_b_witness
    assert P.weight(a) == P.weight(b)


def test_rho_multiplicativity_and_constants(herm22):
    R = herm22.ring
    f = R.gen(0) ** 2 + R.gen(1)
    g = R.gen(2) + 1
    assert rho(f * g, herm22) == OrderValue(
        tuple(a + b for a, b in zip(rho(f, herm22).value, rho(g, herm22).value))
    )
    assert rho(R.one(), herm22) == OrderValue((0, 0))
    assert rho(R.zero(), herm22) == MINUS_INFINITY


def test_standard_monomials_against_sort_oracle(herm22):
    # oracle: sort the footprint by (M-weight, tau) directly
    order = herm22.order
    lts = [g.leading(order)[0] for g in herm22.gb]
    footprint = [
        e
        for e in itertools.product(range(6), repeat=3)
        if sum(e) <= 5 and not any(all(a <= b for a, b in zip(lt, e)) for lt in lts)
    ]
    footprint.sort(key=order.key)
    got = standard_monomials(herm22, count=12)
    assert got == footprint[:12]
    by_degree = standard_monomials(herm22, max_degree=2)
    assert by_degree == [e for e in footprint if sum(e) <= 2]


def test_standard_monomial_weights_distinct(herm22):
    mons = standard_monomials(herm22, count=50)
    weights = [herm22.weight(e) for e in mons]
    assert len(set(weights)) == len(weights)
    assert weights == sorted(weights)  # ascending in the value semigroup


def test_axiom_probe_clean(herm22):
    assert axiom_probe(herm22, trials=200, seed=5) == []


def test_axiom_probe_flags_broken_presentation():
    # a presentation that fails condition (b) admits genuine axiom violations;
    # the probe is still callable and the report records the failure
    R = Ring(build_field(5, 1), ["X", "Y"])
    X, Y = R.gens()
    P = Presentation(R, [X**3 - Y**2 + X * Y], [[1, 1]], tau=Lex())
    verify_gp(P)
    assert not P.verified
    with pytest.raises(ValueError):
        deform_to_toric(P)


def test_toric_ideal_binomials_weight_tied(herm22):
    gens = toric_ideal(herm22.M, herm22.ring)
    for g in gens:
        terms = list(g.terms.items())
        assert len(terms) == 2
        (ea, ca), (eb, cb) = terms
        assert herm22.weight(ea) == herm22.weight(eb)
        assert {ca, cb} == {1, herm22.ring.field.neg_c(1)} or (
            ca == cb == 1 and herm22.ring.field.p == 2
        )


def test_toric_ideal_of_twisted_cubic_weights():
    R = Ring(build_field(7, 1), ["x", "y"])
    gens = toric_ideal([[2, 3]], R)
    # kernel of x -> t^2, y -> t^3 is generated by x^3 - y^2
    assert len(gens) == 1
    assert sorted(gens[0].terms) == [(0, 2), (3, 0)]


@pytest.mark.parametrize("make", [
    lambda: hermitian_presentation(2, 2),
    lambda: hermitian_presentation(2, 3),
    lambda: hermitian_tangent_presentation(2, 2),
])
def test_deform_to_toric_matches(make):
    P = make()
    verify_gp(P)
    result = deform_to_toric(P)
    assert result.toric_match
    assert result.failure is None
    # the limit keeps exactly the tie pair of each GB element
    for g, lim in zip(P.gb, result.limit_generators):
        assert set(lim.terms) <= set(g.terms)
        assert len(lim.terms) == 2


def test_deform_limit_is_weight_homogeneous(herm22):
    result = deform_to_toric(herm22)
    for lim in result.limit_generators:
        ws = {herm22.weight(e) for e in lim.terms}
        assert len(ws) == 1


def test_presentation_json_round_trip(herm22):
    obj = herm22.to_json()
    Q = Presentation.from_json(obj)
    assert Q.ring == herm22.ring
    assert Q.M == herm22.M
    assert [g.terms for g in Q.generators] == [g.terms for g in herm22.generators]
    assert verify_gp(Q).passed
