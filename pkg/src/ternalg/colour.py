"""Abelian grading groups, commutation factors, and colour-bracket weights.

A commutation factor N on a finite abelian group satisfies
N(a,b) N(b,a) = 1 and is biadditive in each slot.  Here the group of
interest is Z_3 x Z_3 x Z_3 and the factor takes values in the cube roots
of unity, represented exactly in Q(q).  The factor converts the fully
symmetric ternary bracket into the q-weighted colour bracket.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cyclo import Cyclo, ONE, Q
from .report import CheckReport, Timer


@dataclass(frozen=True)
class GradingGroup:
    """The group Z_n^k."""

    modulus: int = 3
    rank: int = 3

    def __post_init__(self):
        if self.modulus < 2 or self.rank < 1:
            raise ValueError("need modulus >= 2 and rank >= 1")

    def elements(self):
        return itertools.product(range(self.modulus), repeat=self.rank)

    def order(self) -> int:
        return self.modulus ** self.rank


class GradeVector(tuple):
    """An element of Z_n^k, componentwise reduced."""

    def __new__(cls, components, modulus: int = 3):
        return super().__new__(cls, (c % modulus for c in components))


class CommutationFactor:
    """A map (grade, grade) -> Q(q)*.

    Either backed by an arbitrary callable, or (the common case here) by a
    bilinear exponent form B so that N(a, b) = q^(a . B . b mod 3); the
    exponent form enables the exhaustive vectorised axiom sweep over all
    729^2 pairs and streamed triples.
    """

    def __init__(self, evaluate=None, exponent_form=None, modulus: int = 3):
        if (evaluate is None) == (exponent_form is None):
            raise ValueError("give exactly one of evaluate / exponent_form")
        self.modulus = modulus
        if exponent_form is not None:
            self.exponent_form = np.asarray(exponent_form, dtype=np.int64)
            self._root = Q if modulus == 3 else None
            if self._root is None:
                raise ValueError("exponent forms are supported for modulus 3")
        else:
            self.exponent_form = None
            self._evaluate = evaluate

    def __call__(self, a, b) -> Cyclo:
        if self.exponent_form is not None:
            e = int(np.dot(np.dot(a, self.exponent_form), b)) % self.modulus
            return Q ** e
        return self._evaluate(a, b)


def paper_factor() -> CommutationFactor:
    """The factor on Z_3^3 with exponent a1(b2+b3) + a2 b3 - b1(a2+a3) - b2 a3."""
    form = [[0, 1, 1],
            [-1, 0, 1],
            [-1, -1, 0]]
    return CommutationFactor(exponent_form=form)


def check_axioms(factor: CommutationFactor, group: GradingGroup) -> CheckReport:
    """Exhaustive verification of the three commutation-factor axioms.

    Axiom 1 runs over all pairs, axioms 2 and 3 over all triples (streamed
    row-by-row in the vectorised path, never materialising the full cube).
    """
    rep = CheckReport(
        "colour.axioms",
        "N(a,b) N(b,a) = 1; N(a,b+c) = N(a,b) N(a,c); "
        "N(a+b,c) = N(a,c) N(b,c)")
    with Timer(rep):
        if factor.exponent_form is not None and group.modulus == factor.modulus:
            _check_axioms_exponent(factor, group, rep)
        else:
            _check_axioms_generic(factor, group, rep)
    return rep


def _check_axioms_exponent(factor, group, rep):
    n = group.modulus
    elems = np.array(list(group.elements()), dtype=np.int64)
    order = len(elems)
    # E[i, j] = exponent of N(elems[i], elems[j]) mod n
    E = (elems @ factor.exponent_form @ elems.T) % n
    bad = np.argwhere((E + E.T) % n != 0)
    for i, j in bad[:20]:
        rep.add_residual((tuple(elems[i]), tuple(elems[j])),
                         f"N(a,b)N(b,a) = q^{int((E[i, j] + E[j, i]) % n)}")
    if len(bad) > 20:
        rep.add_residual(("...",), f"{len(bad)} axiom-1 violations total")
    # index of the sum b + c for every pair, as a flat lookup
    weights = n ** np.arange(elems.shape[1] - 1, -1, -1)
    sum_index = (((elems[:, None, :] + elems[None, :, :]) % n) @ weights)
    for i in range(order):  # stream over a; each row check covers order^2 triples
        lhs = E[i, sum_index]               # N(a, b+c) exponents
        rhs = (E[i][:, None] + E[i][None, :]) % n
        bad = np.argwhere((lhs - rhs) % n != 0)
        for j, k in bad[:5]:
            rep.add_residual((tuple(elems[i]), tuple(elems[j]), tuple(elems[k])),
                             "axiom 2 fails")
        if len(bad):
            break
    # axiom 3 follows by transposition symmetry of the bilinear form, but
    # verify it independently anyway
    for k in range(order):
        lhs = E[sum_index, k]               # N(a+b, c) exponents
        rhs = (E[:, k][:, None] + E[:, k][None, :]) % n
        bad = np.argwhere((lhs - rhs) % n != 0)
        for i, j in bad[:5]:
            rep.add_residual((tuple(elems[i]), tuple(elems[j]), tuple(elems[k])),
                             "axiom 3 fails")
        if len(bad):
            break


def _check_axioms_generic(factor, group, rep):
    n = group.modulus
    elems = [GradeVector(e, n) for e in group.elements()]
    for a, b in itertools.product(elems, repeat=2):
        if factor(a, b) * factor(b, a) != ONE:
            rep.add_residual((tuple(a), tuple(b)), "axiom 1 fails")
            if len(rep.residuals) > 20:
                return
    for a, b, c in itertools.product(elems, repeat=3):
        bc = GradeVector((x + y for x, y in zip(b, c)), n)
        ab = GradeVector((x + y for x, y in zip(a, b)), n)
        if factor(a, bc) != factor(a, b) * factor(a, c):
            rep.add_residual((tuple(a), tuple(b), tuple(c)), "axiom 2 fails")
            return
        if factor(ab, c) != factor(a, c) * factor(b, c):
            rep.add_residual((tuple(a), tuple(b), tuple(c)), "axiom 3 fails")
            return


def colour_weights(factor: CommutationFactor, g1, g2, g3):
    """The six colour-bracket weights for orderings (123,231,312,132,213,321)."""
    def plus(a, b):
        return GradeVector((x + y for x, y in zip(a, b)), factor.modulus)

    return (ONE,
            factor(g1, plus(g2, g3)),
            factor(plus(g1, g2), g3),
            factor(g2, g3),
            factor(g1, g2),
            factor(g1, g2) * factor(g1, g3) * factor(g2, g3))


def standard_grades(modulus: int = 3):
    """The parameter-family grades (1,0,0), (0,1,0), (0,0,1) on Z_3^3."""
    return (GradeVector((1, 0, 0), modulus),
            GradeVector((0, 1, 0), modulus),
            GradeVector((0, 0, 1), modulus))


def col3_weights():
    """The weights (1, q^2, q^2, q, q, 1) induced by the standard grades."""
    return colour_weights(paper_factor(), *standard_grades())


def factor_table_csv(factor: CommutationFactor, group: GradingGroup) -> str:
    """CSV dump of the factor over the whole group, as exponents of q."""
    if factor.exponent_form is None:
        raise ValueError("CSV dump needs an exponent-form factor")
    elems = np.array(list(group.elements()), dtype=np.int64)
    E = (elems @ factor.exponent_form @ elems.T) % group.modulus
    header = "a\\b," + ",".join("".join(map(str, e)) for e in elems)
    lines = [header]
    for i, e in enumerate(elems):
        lines.append("".join(map(str, e)) + "," + ",".join(map(str, E[i])))
    return "\n".join(lines) + "\n"
