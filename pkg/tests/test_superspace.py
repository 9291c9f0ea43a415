"""Parafermionic relation families, realised symmetry generators and the
transformation checks, at the small dimension where everything is fast."""

from fractions import Fraction

from ternalg.algebra import commutator, sym3
from ternalg.colour import col3_weights
from ternalg.superspace import (MetricSignature, SuperspaceConfig, build,
                                check_closure, check_parafermion_relations,
                                check_poincare_realisation, check_psi_bracket,
                                check_roby, check_superspace_transformation)


def _all_pass(reports):
    failed = [(r.check_id, r.residuals[:2]) for r in reports if not r.passed]
    assert not failed, failed


def test_green_component_counts(alg2):
    # 11 parafermionic names at d=2 (scalar theta, theta^mu, d_mu and the
    # three eps families), two Green components each, plus x and P
    assert alg2.system.size() == 11 * 2 + 2 * 2


def test_component_level_pairing(alg2):
    from ternalg.algebra import Element
    from ternalg.superspace import CLS_DEL, CLS_THETA
    sys_ = alg2.system
    th = Element.generator(sys_, alg2._ids[(CLS_THETA, 0, 0)])
    d_same = Element.generator(sys_, alg2._ids[(CLS_DEL, 0, 0)])
    d_cross = Element.generator(sys_, alg2._ids[(CLS_DEL, 0, 1)])
    # same Green sector: {theta(r), d(r)} = kappa = 1/2
    assert str(th * d_same + d_same * th) == "1/2"
    # distinct sectors commute
    assert not commutator(th, d_cross)
    # parafermionic squares vanish
    assert not th * th


def test_relation_families(alg2):
    _all_pass(check_parafermion_relations(alg2))


def test_trilinear_spot_checks(alg2):
    th0, th1, d1 = alg2.theta(0), alg2.theta(1), alg2.d(1)
    assert commutator(commutator(th0, d1), th1) == th0
    assert sym3(th0, th1, d1) == th0.scale(2)
    assert not sym3(th0, th1, th1)
    assert not commutator(commutator(th0, th1), th1)


def test_corrupted_pairing_leaves_residual():
    """With kappa = 1 the trilinear coefficients double, so the family
    [[theta, d], theta] check must fail with residual exactly theta^mu."""
    alg = build(SuperspaceConfig(metric=MetricSignature.minkowski(2),
                                 pairing_kappa=Fraction(1)))
    reports = {r.check_id: r for r in check_parafermion_relations(alg)}
    bad = reports["para1.3"]
    assert not bad.passed
    rendered = [r["element"] for r in bad.residuals]
    assert str(alg.theta(0)) in rendered


def test_roby(alg2):
    _all_pass([check_roby(alg2)])


def test_roby_instance_count(alg2):
    # 7 coordinate-type names at d=2 -> C(9,3) unordered triples with
    # repetition; every one reduces to zero
    names = alg2.non_derivative_choices()
    assert len(names) == 1 + 2 + 3 * 2


def test_poincare(alg2):
    _all_pass(check_poincare_realisation(alg2))


def test_lorentz_orientation(alg2):
    # [J_{01}, theta_1] = eta_{11} theta_0
    lhs = commutator(alg2.J(0, 1), alg2.theta_lower(1))
    assert lhs == alg2.theta_lower(0).scale(alg2.eta[1])


def test_psi_bracket(alg2):
    rep = check_psi_bracket(alg2)
    assert rep.passed, rep.residuals[:2]
    assert "computed global sign +1" in rep.notes


def test_transformation(alg2):
    _all_pass(check_superspace_transformation(alg2))


def test_transformation_spot_checks(alg2):
    assert commutator(alg2.V(1), alg2.theta(0)) == alg2.eps(1, 0)
    assert commutator(alg2.V(2), alg2.x(1)) == alg2.delta_x(2, 1)
    assert not commutator(alg2.V(1), alg2.eps(3, 0))


def test_closure(alg2):
    reports = check_closure(alg2, col3_weights(), seed=0)
    _all_pass(reports)
    by_id = {r.check_id: r for r in reports}
    assert "multiset matches" in by_id["closure.deltax"].notes


def test_dimension_three_smoke():
    alg = build(SuperspaceConfig(metric=MetricSignature.minkowski(3)))
    _all_pass(check_poincare_realisation(alg))
