"""Structure-constant tables: axioms, the built-in instance, corruption
detection and JSON interchange."""

import copy
from fractions import Fraction

import pytest

from ternalg.order3 import (StructureConstants3, _zeros,
                            check_against_superspace, check_lie_order3,
                            cubic_poincare)
from ternalg.superspace import MetricSignature


def _all_pass(reports):
    failed = [(r.check_id, r.residuals[:2]) for r in reports if not r.passed]
    assert not failed, failed


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_cubic_poincare_passes(d):
    sc = cubic_poincare(MetricSignature.minkowski(d))
    assert sc.dim0 == d * (d - 1) // 2 + d
    assert sc.dim1 == d
    assert not sc.validate_symmetries()
    _all_pass(check_lie_order3(sc))


def test_euclidean_metric_passes():
    sc = cubic_poincare(MetricSignature(3, (1, 1, 1)))
    _all_pass(check_lie_order3(sc))


def test_abelian_instance_passes():
    sc = StructureConstants3(2, 2, _zeros(2, 2, 2), _zeros(2, 2, 2),
                             _zeros(2, 2, 2, 2))
    _all_pass(check_lie_order3(sc))


def _corrupt(sc):
    return StructureConstants3(sc.dim0, sc.dim1, sc.f.copy(), sc.R.copy(),
                               sc.Q.copy(), sc.labels0, sc.labels1)


def test_broken_jacobi_is_localized():
    sc = _corrupt(cubic_poincare(MetricSignature.minkowski(4)))
    # overwrite [L_{01}, L_{02}] with a wrong target
    sc.f[0, 1, :] = _zeros(sc.dim0)
    sc.f[0, 1, 3] = Fraction(1)
    sc.f[1, 0, 3] = Fraction(-1)
    reports = {r.check_id: r for r in check_lie_order3(sc)}
    bad = reports["order3.jacobi"]
    assert not bad.passed
    # every reported index tuple involves the corrupted bracket pair
    assert all({0, 1} & set(res["indices"][:3]) for res in bad.residuals)


def test_broken_q_symmetry_is_detected():
    sc = _corrupt(cubic_poincare(MetricSignature.minkowski(4)))
    sc.Q[0, 1, 2, 0] += Fraction(1)   # only one permutation touched
    bad = sc.validate_symmetries()
    assert bad
    assert bad[0][0] == "Q-sym"
    assert set(bad[0][1:4]) == {0, 1, 2}


def test_broken_fi_is_localized():
    sc = _corrupt(cubic_poincare(MetricSignature.minkowski(4)))
    # symmetric corruption: Q-storage stays valid but the fundamental
    # identity breaks at the touched odd indices
    import itertools
    for p in set(itertools.permutations((0, 1, 1))):
        sc.Q[p + (0,)] += Fraction(1)
    assert not sc.validate_symmetries()
    reports = {r.check_id: r for r in check_lie_order3(sc)}
    assert not reports["order3.fi"].passed
    for res in reports["order3.fi"].residuals:
        assert {0, 1} & set(res["indices"][:4])


def test_json_round_trip():
    sc = cubic_poincare(MetricSignature.minkowski(3))
    again = StructureConstants3.from_json(sc.to_json())
    assert (again.f == sc.f).all()
    assert (again.R == sc.R).all()
    assert (again.Q == sc.Q).all()
    assert again.labels0 == sc.labels0


def test_json_rejects_broken_symmetry():
    sc = _corrupt(cubic_poincare(MetricSignature.minkowski(2)))
    sc.Q[0, 0, 1, 0] += Fraction(1)
    with pytest.raises(ValueError):
        StructureConstants3.from_json(sc.to_json())


def test_superspace_cross_check(alg2):
    sc = cubic_poincare(MetricSignature.minkowski(2))
    rep = check_against_superspace(sc, alg2)
    assert rep.passed, rep.residuals[:3]


def test_superspace_metric_mismatch(alg2):
    # flipped signature realises different structure constants
    sc = cubic_poincare(MetricSignature(2, (-1, 1)))
    rep = check_against_superspace(sc, alg2)
    assert not rep.passed


def test_shape_validation():
    with pytest.raises(ValueError):
        StructureConstants3(2, 2, _zeros(2, 2), _zeros(2, 2, 2),
                            _zeros(2, 2, 2, 2))
