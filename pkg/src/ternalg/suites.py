"""Named check suites: the batch-verification entry point.

Each suite id maps to a list of check callables; ``run_suite`` executes
them (optionally on a thread pool capped by ``TERNALG_THREADS``) and
returns the reports in a deterministic order.  Heavy shared objects (the
superspace algebra at the requested dimension) are built once per run.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import colour, matrixrep, order3
from .algebra import random_element, random_raw_terms, sym3
from .cyclo import Cyclo, ONE, Q, ZERO
from .report import CheckReport, Timer
from .superspace import (CLS_DEL, CLS_EPS, CLS_THETA, CLS_THETA_SC, CLS_X,
                         MetricSignature, SuperspaceAlgebra, SuperspaceConfig,
                         build, check_closure, check_parafermion_relations,
                         check_poincare_realisation, check_psi_bracket,
                         check_roby, check_superspace_transformation)

SUITE_IDS = ("arith", "engine", "para", "roby", "poincare", "order3",
             "colour", "superspace", "closure", "oracle", "all")


@dataclass(frozen=True)
class SuiteSpec:
    suite: str
    dimension: int = 4
    seed: int = 0
    kappa: Fraction = Fraction(1, 2)

    def __post_init__(self):
        if self.suite not in SUITE_IDS:
            raise ValueError(f"unknown suite {self.suite!r}; "
                             f"choose from {', '.join(SUITE_IDS)}")

    def config_dict(self) -> dict:
        metric = MetricSignature.minkowski(self.dimension)
        return {"dimension": self.dimension,
                "metric": list(metric.eta),
                "kappa": str(self.kappa),
                "cross_sign": 1,
                "seed": self.seed}


# -- exact-arithmetic suite ----------------------------------------------

def _random_cyclo(rng: random.Random) -> Cyclo:
    return Cyclo(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                 Fraction(rng.randint(-9, 9), rng.randint(1, 9)))


def check_arith(seed: int = 0) -> list[CheckReport]:
    rng = random.Random(seed)
    samples = [_random_cyclo(rng) for _ in range(40)]

    rep = CheckReport("arith.root",
                      "q is a primitive cube root of unity: q^3 = 1 and "
                      "1 + q + q^2 = 0")
    with Timer(rep):
        if Q ** 3 != ONE:
            rep.add_residual(("q^3",), str(Q ** 3))
        if ONE + Q + Q * Q != ZERO:
            rep.add_residual(("1+q+q^2",), str(ONE + Q + Q * Q))
    reports = [rep]

    rep = CheckReport("arith.ring",
                      "commutative ring laws on random samples "
                      "(associativity, distributivity, units)")
    with Timer(rep):
        for k in range(0, len(samples) - 2, 3):
            a, b, c = samples[k:k + 3]
            if (a * b) * c != a * (b * c):
                rep.add_residual((k, "assoc"), str((a * b) * c - a * (b * c)))
            if a * (b + c) != a * b + a * c:
                rep.add_residual((k, "dist"), str(a * (b + c) - a * b - a * c))
            if a * ONE != a or a + ZERO != a:
                rep.add_residual((k, "unit"), str(a))
    reports.append(rep)

    rep = CheckReport("arith.conj",
                      "conjugation (q -> q^2) is an involutive ring map and "
                      "a*conj(a) is the rational norm")
    with Timer(rep):
        for k in range(0, len(samples) - 1, 2):
            a, b = samples[k:k + 2]
            if a.conj().conj() != a:
                rep.add_residual((k, "invol"), str(a))
            if (a * b).conj() != a.conj() * b.conj():
                rep.add_residual((k, "mult"), str(a * b))
            n = a * a.conj()
            if not n.is_real() or n.re < 0:
                rep.add_residual((k, "norm"), str(n))
    reports.append(rep)

    rep = CheckReport("arith.division",
                      "every nonzero element is invertible: (a/b)*b = a")
    with Timer(rep):
        for k in range(0, len(samples) - 1, 2):
            a, b = samples[k:k + 2]
            if not b:
                continue
            if (a / b) * b != a:
                rep.add_residual((k,), str((a / b) * b - a))
    reports.append(rep)
    return reports


# -- rewriting-engine suite ----------------------------------------------

def _engine_algebra() -> SuperspaceAlgebra:
    return build(SuperspaceConfig(metric=MetricSignature.minkowski(2)))


def check_engine(seed: int = 0) -> list[CheckReport]:
    alg = _engine_algebra()
    system = alg.system
    rng = random.Random(seed)

    rep = CheckReport("engine.idempotent",
                      "normal forming a normal form changes nothing")
    with Timer(rep):
        for k in range(50):
            raw = random_raw_terms(system, rng)
            nf = system.normalize_terms(raw)
            if system.normalize_terms(nf) != nf:
                rep.add_residual((k,), "second pass differs")
    reports = [rep]

    rep = CheckReport("engine.confluence",
                      "leftmost, rightmost and randomised rewriting "
                      "strategies all reach the same normal form")
    with Timer(rep):
        for k in range(100):
            raw = random_raw_terms(system, rng)
            nf = system.normalize_terms(raw)
            for strategy in ("leftmost", "rightmost", "random"):
                got = system.reduce_terms(raw, strategy, rng=rng)
                if got != nf:
                    rep.add_residual((k, strategy), "strategies disagree")
    reports.append(rep)

    # on the parafermionic sector the rewrite rules are stable under word
    # reversal, so star is an anti-automorphism there; the bosonic rule
    # P x = x P + 1 is not reversal-stable with fixed generators (that
    # would need star(P) = -P), hence the fermionic generator restriction
    fermionic = sorted(gid for key, gid in alg._ids.items()
                       if key[0] < CLS_X)
    rep = CheckReport("engine.star",
                      "on the parafermionic sector star is an antilinear "
                      "anti-involution: star(star(a)) = a, "
                      "star(ab) = star(b)star(a)")
    with Timer(rep):
        for k in range(30):
            a = random_element(system, rng, fermionic, max_degree=3)
            b = random_element(system, rng, fermionic, max_degree=3)
            if a.star().star() != a:
                rep.add_residual((k, "invol"), str(a.star().star() - a))
            if (a * b).star() != b.star() * a.star():
                rep.add_residual((k, "anti"),
                                 str((a * b).star() - b.star() * a.star()))
    reports.append(rep)

    rep = CheckReport("engine.sym3",
                      "the symmetric ternary bracket is invariant under "
                      "all six argument permutations")
    with Timer(rep):
        for k in range(10):
            args = [random_element(system, rng, max_degree=2, n_terms=2)
                    for _ in range(3)]
            base = sym3(*args)
            for p in permutations(args):
                if sym3(*p) != base:
                    rep.add_residual((k,), str(sym3(*p) - base))
    reports.append(rep)
    return reports


# -- colour suite ---------------------------------------------------------

def check_colour(seed: int = 0) -> list[CheckReport]:
    factor = colour.paper_factor()
    group = colour.GradingGroup()
    reports = [colour.check_axioms(factor, group)]

    rep = CheckReport("colour.weights",
                      "the standard grades (1,0,0),(0,1,0),(0,0,1) induce "
                      "the bracket weights (1, q^2, q^2, q, q, 1)")
    with Timer(rep):
        got = colour.col3_weights()
        want = (ONE, Q * Q, Q * Q, Q, Q, ONE)
        if tuple(got) != want:
            rep.add_residual(("weights",), ", ".join(map(str, got)))
        if sum(got, ZERO) != ZERO:
            rep.add_residual(("sum",), str(sum(got, ZERO)))
    reports.append(rep)
    return reports


# -- oracle suite ---------------------------------------------------------

def _oracle_subsystems(dim: int):
    """Representative <=3-name subsystems covering every pairing class:
    a lone name, a conjugate theta/d pair, two same-class names, a
    cross-family pair, the scalar with a conjugate pair, the mixed triple
    behind the surviving symmetric bracket, and three parameter families."""
    subs = [
        ("th0", [(CLS_THETA, 0)]),
        ("th0-d0", [(CLS_THETA, 0), (CLS_DEL, 0)]),
        ("sc-th0-d0", [(CLS_THETA_SC, 0), (CLS_THETA, 0), (CLS_DEL, 0)]),
        ("e1-e2-e3", [(CLS_EPS[0], 0), (CLS_EPS[1], 0), (CLS_EPS[2], 0)]),
    ]
    if dim >= 2:
        subs += [
            ("th0-th1", [(CLS_THETA, 0), (CLS_THETA, 1)]),
            ("th0-e1", [(CLS_THETA, 0), (CLS_EPS[0], 1)]),
            ("th0-th1-d1", [(CLS_THETA, 0), (CLS_THETA, 1), (CLS_DEL, 1)]),
        ]
    return subs


def check_oracle(alg: SuperspaceAlgebra, seed: int = 0,
                 n_samples: int = 200) -> list[CheckReport]:
    reports = []
    for tag, names in _oracle_subsystems(alg.dimension):
        rep = matrixrep.build_rep(alg, names)
        r = matrixrep.check_representation(rep)
        r.check_id = f"oracle.rep.{tag}"
        reports.append(r)
        r = matrixrep.check_random_equivalence(rep, n_samples=n_samples,
                                               seed=seed)
        r.check_id = f"oracle.random.{tag}"
        reports.append(r)

    rep_zero = CheckReport(
        "oracle.zero",
        "symbolically-zero relation instances map to the zero matrix, and "
        "the one surviving symmetric bracket maps to its matrix value")
    with Timer(rep_zero):
        if alg.dimension >= 2:
            names = [(CLS_THETA, 0), (CLS_THETA, 1), (CLS_DEL, 1)]
            rep = matrixrep.build_rep(alg, names)
            th0, th1, d1 = alg.theta(0), alg.theta(1), alg.d(1)
            probes = [
                ("sym-surviving", sym3(th0, th1, d1) - th0.scale(2)),
                ("sym-theta", sym3(th0, th1, th1)),
                ("double-comm", (th0 * th1 - th1 * th0) * th1
                 - th1 * (th0 * th1 - th1 * th0)),
            ]
            for tag, e in probes:
                if e:
                    rep_zero.add_residual((tag,), "expected symbolic zero: "
                                          + str(e))
                elif not rep.evaluate(e).is_zero():
                    rep_zero.add_residual((tag,), "nonzero matrix image")
        names = [(CLS_EPS[0], 0), (CLS_EPS[1], 0), (CLS_EPS[2], 0)]
        rep = matrixrep.build_rep(alg, names)
        e = sym3(alg.eps(1, 0), alg.eps(2, 0), alg.eps(3, 0))
        if e or not rep.evaluate(e).is_zero():
            rep_zero.add_residual(("eps-roby",), str(e))
    reports.append(rep_zero)
    return reports


# -- suite registry -------------------------------------------------------

def _thread_count() -> int:
    raw = os.environ.get("TERNALG_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(spec: SuiteSpec) -> list[CheckReport]:
    """Execute one suite; deterministic given (suite, seed, dimension)."""
    metric = MetricSignature.minkowski(spec.dimension)
    needs_alg = spec.suite in ("para", "roby", "poincare", "superspace",
                               "closure", "oracle", "all")
    alg = None
    if needs_alg:
        alg = build(SuperspaceConfig(metric=metric, pairing_kappa=spec.kappa))

    jobs = []  # list of zero-argument callables returning report lists
    if spec.suite in ("arith", "all"):
        jobs.append(lambda: check_arith(spec.seed))
    if spec.suite in ("engine", "all"):
        jobs.append(lambda: check_engine(spec.seed))
    if spec.suite in ("para", "all"):
        jobs.append(lambda: check_parafermion_relations(alg))
    if spec.suite in ("roby", "all"):
        jobs.append(lambda: [check_roby(alg)])
    if spec.suite in ("poincare", "all"):
        def _poincare():
            out = check_poincare_realisation(alg)
            sc = order3.cubic_poincare(metric)
            out.append(order3.check_against_superspace(sc, alg))
            return out
        jobs.append(_poincare)
    if spec.suite in ("order3", "all"):
        jobs.append(lambda: order3.check_lie_order3(order3.cubic_poincare(metric)))
    if spec.suite in ("colour", "all"):
        jobs.append(lambda: check_colour(spec.seed))
    if spec.suite in ("superspace", "all"):
        jobs.append(lambda: check_superspace_transformation(alg)
                    + [check_psi_bracket(alg)])
    if spec.suite in ("closure", "all"):
        jobs.append(lambda: check_closure(alg, colour.col3_weights(),
                                          seed=spec.seed))
    if spec.suite in ("oracle", "all"):
        jobs.append(lambda: check_oracle(alg, seed=spec.seed))

    n_threads = _thread_count()
    if n_threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            chunks = list(pool.map(lambda j: j(), jobs))
    else:
        chunks = [j() for j in jobs]
    return [r for chunk in chunks for r in chunk]
