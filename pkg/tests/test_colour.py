"""Commutation factors on Z_3^3 and the induced colour-bracket weights."""

import pytest

from ternalg.algebra import colour3, sym3
from ternalg.colour import (CommutationFactor, GradeVector, GradingGroup,
                            check_axioms, col3_weights, colour_weights,
                            factor_table_csv, paper_factor, standard_grades)
from ternalg.cyclo import ONE, Q, ZERO


def test_axioms_exhaustive():
    rep = check_axioms(paper_factor(), GradingGroup())
    assert rep.passed, rep.residuals[:3]


def test_trivial_factor_passes_generic_path():
    trivial = CommutationFactor(evaluate=lambda a, b: ONE)
    rep = check_axioms(trivial, GradingGroup(modulus=3, rank=2))
    assert rep.passed


def test_non_factor_counterexample():
    # q^(a1*b1) is symmetric, so N(a,b)N(b,a) = q^(2 a1 b1) != 1
    bad = CommutationFactor(exponent_form=[[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    rep = check_axioms(bad, GradingGroup())
    assert not rep.passed
    assert any("q^" in res["element"] for res in rep.residuals)


def test_col3_weights():
    assert tuple(col3_weights()) == (ONE, Q * Q, Q * Q, Q, Q, ONE)


def test_weights_sum_to_zero():
    assert sum(col3_weights(), ZERO) == ZERO


def test_zero_grades_give_symmetric_bracket():
    zero = GradeVector((0, 0, 0))
    weights = colour_weights(paper_factor(), zero, zero, zero)
    assert all(w == ONE for w in weights)


def test_grade_vector_reduction():
    assert GradeVector((4, -1, 3)) == (1, 2, 0)


def test_colour3_matches_sym3_for_unit_weights(alg2):
    a, b, c = alg2.theta(0), alg2.theta(1), alg2.d(0)
    assert colour3(a, b, c, (ONE,) * 6) == sym3(a, b, c)


def test_colour3_cube_vanishes(alg2):
    # weights sum to zero, so the bracket of three equal arguments dies
    u = alg2.eps(1, 0) + alg2.theta(1)
    assert not colour3(u, u, u, col3_weights())


def test_factor_symmetry_pairing():
    n = paper_factor()
    g1, g2, g3 = standard_grades()
    assert n(g1, g2) * n(g2, g1) == ONE
    assert n(g1, g2) == Q


def test_csv_dump_shape():
    text = factor_table_csv(paper_factor(), GradingGroup())
    lines = text.strip().split("\n")
    assert len(lines) == 1 + 27
    assert lines[0].startswith("a\\b,000,001")
    assert set(lines[1].split(",")[1:]) <= {"0", "1", "2"}


def test_exponent_form_requires_modulus_three():
    with pytest.raises(ValueError):
        CommutationFactor(exponent_form=[[1]], modulus=5)
    with pytest.raises(ValueError):
        CommutationFactor()
