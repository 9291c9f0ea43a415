"""Structure-constant model of elementary Lie algebras of order three.

The data is a triple (f, R, Q): an antisymmetric bracket table f on the
even part g0, the action R of g0 on the odd part g1, and a fully symmetric
ternary table Q mapping S^3(g1) into g0.  Four identities are checked,
each exhaustively over its index ranges:

  1. Jacobi identity of f;
  2. representation property [R_i, R_j] = f_{ij}^k R_k;
  3. equivariance of Q under the g0 action (implied by g1 being a
     representation and Q landing in g0; not usually displayed);
  4. the four-term fundamental identity contracted over structure
     constants.

All entries are exact rationals.  The cubic Poincare extension is provided
as a built-in instance, and its even sector can be cross-validated against
the differential realisation on the ternary superspace.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import commutator
from .report import CheckReport, Timer
from .superspace import MetricSignature, SuperspaceAlgebra


def _zeros(*shape):
    a = np.empty(shape, dtype=object)
    a.fill(Fraction(0))
    return a


@dataclass
class StructureConstants3:
    """Dense exact tables f_{ij}^k, R_{ia}^b, Q_{abc}^i.

    Index convention: [X_i, X_j] = f_{ij}^k X_k, [X_i, Y_a] = R_{ia}^b Y_b,
    {Y_a, Y_b, Y_c} = Q_{abc}^i X_i.
    """

    dim0: int
    dim1: int
    f: np.ndarray
    R: np.ndarray
    Q: np.ndarray
    labels0: tuple = ()
    labels1: tuple = ()

    def __post_init__(self):
        if self.f.shape != (self.dim0,) * 3:
            raise ValueError("f must have shape (dim0, dim0, dim0)")
        if self.R.shape != (self.dim0, self.dim1, self.dim1):
            raise ValueError("R must have shape (dim0, dim1, dim1)")
        if self.Q.shape != (self.dim1,) * 3 + (self.dim0,):
            raise ValueError("Q must have shape (dim1, dim1, dim1, dim0)")
        if not self.labels0:
            self.labels0 = tuple(f"X{i}" for i in range(self.dim0))
        if not self.labels1:
            self.labels1 = tuple(f"Y{a}" for a in range(self.dim1))

    # -- storage invariants (re-validated defensively on load) ----------

    def validate_symmetries(self) -> list:
        bad = []
        n0, n1 = self.dim0, self.dim1
        for i, j, k in itertools.product(range(n0), repeat=3):
            if self.f[i, j, k] != -self.f[j, i, k]:
                bad.append(("f-antisym", i, j, k))
        for a, b, c in itertools.product(range(n1), repeat=3):
            for i in range(n0):
                v = self.Q[a, b, c, i]
                if any(self.Q[p + (i,)] != v
                       for p in itertools.permutations((a, b, c))):
                    bad.append(("Q-sym", a, b, c, i))
                    break
        return bad

    # -- JSON interchange ------------------------------------------------

    def to_json(self) -> str:
        def sparse(arr):
            out = []
            for idx in itertools.product(*map(range, arr.shape)):
                v = arr[idx]
                if v:
                    out.append(list(idx) + [str(v)])
            return out

        return json.dumps({
            "dim0": self.dim0, "dim1": self.dim1,
            "labels0": list(self.labels0), "labels1": list(self.labels1),
            "f": sparse(self.f), "R": sparse(self.R), "Q": sparse(self.Q),
        }, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "StructureConstants3":
        doc = json.loads(text)
        n0, n1 = doc["dim0"], doc["dim1"]
        f = _zeros(n0, n0, n0)
        R = _zeros(n0, n1, n1)
        Q = _zeros(n1, n1, n1, n0)
        for arr, entries in ((f, doc["f"]), (R, doc["R"]), (Q, doc["Q"])):
            for entry in entries:
                *idx, val = entry
                arr[tuple(idx)] = Fraction(val)
        sc = cls(n0, n1, f, R, Q,
                 tuple(doc.get("labels0", ())), tuple(doc.get("labels1", ())))
        bad = sc.validate_symmetries()
        if bad:
            raise ValueError(f"loaded tables break storage symmetries: {bad[:3]}")
        return sc


def check_lie_order3(sc: StructureConstants3) -> list[CheckReport]:
    """All four order-three axioms, exhaustively over index ranges."""
    n0, n1 = sc.dim0, sc.dim1
    f, R, Q = sc.f, sc.R, sc.Q
    reports = []

    rep = CheckReport("order3.jacobi",
                      "f_{ij}^m f_{mk}^l + f_{jk}^m f_{mi}^l + f_{ki}^m f_{mj}^l = 0")
    with Timer(rep):
        for i, j, k in itertools.combinations(range(n0), 3):
            for l in range(n0):
                s = sum(f[i, j, m] * f[m, k, l] + f[j, k, m] * f[m, i, l]
                        + f[k, i, m] * f[m, j, l] for m in range(n0))
                if s:
                    rep.add_residual((i, j, k, l), str(s))
    reports.append(rep)

    rep = CheckReport("order3.rep",
                      "[R_i, R_j] = f_{ij}^k R_k  (g1 is a g0 representation)")
    with Timer(rep):
        for i, j in itertools.combinations(range(n0), 2):
            for a in range(n1):
                for c in range(n1):
                    s = sum(R[j, a, b] * R[i, b, c] - R[i, a, b] * R[j, b, c]
                            for b in range(n1))
                    s -= sum(f[i, j, k] * R[k, a, c] for k in range(n0))
                    if s:
                        rep.add_residual((i, j, a, c), str(s))
    reports.append(rep)

    rep = CheckReport("order3.equivariance",
                      "R_{ia}^e Q_{ebc}^j + R_{ib}^e Q_{aec}^j + R_{ic}^e Q_{abe}^j"
                      " = Q_{abc}^k f_{ik}^j  (implied by the even sector acting"
                      " on the ternary bracket)")
    with Timer(rep):
        for i in range(n0):
            for a, b, c in itertools.combinations_with_replacement(range(n1), 3):
                for j in range(n0):
                    s = sum(R[i, a, e] * Q[e, b, c, j] + R[i, b, e] * Q[a, e, c, j]
                            + R[i, c, e] * Q[a, b, e, j] for e in range(n1))
                    s -= sum(Q[a, b, c, k] * f[i, k, j] for k in range(n0))
                    if s:
                        rep.add_residual((i, a, b, c, j), str(s))
    reports.append(rep)

    rep = CheckReport("order3.fi",
                      "Q_{bcd}^i R_{ia}^e + Q_{dab}^i R_{ic}^e + Q_{cda}^i R_{ib}^e"
                      " + Q_{abc}^i R_{id}^e = 0  (four-term fundamental identity)")
    with Timer(rep):
        for a, b, c, d in itertools.combinations_with_replacement(range(n1), 4):
            for e in range(n1):
                s = sum(Q[b, c, d, i] * R[i, a, e] + Q[d, a, b, i] * R[i, c, e]
                        + Q[c, d, a, i] * R[i, b, e] + Q[a, b, c, i] * R[i, d, e]
                        for i in range(n0))
                if s:
                    rep.add_residual((a, b, c, d, e), str(s))
    reports.append(rep)
    return reports


def cubic_poincare(metric: MetricSignature) -> StructureConstants3:
    """The cubic Poincare extension: g0 = Lorentz + translations, g1 the
    vector representation, ternary bracket landing on translations."""
    d = metric.dimension
    eta = metric.eta
    lorentz_pairs = list(itertools.combinations(range(d), 2))
    n_lor = len(lorentz_pairs)
    n0 = n_lor + d
    n1 = d
    lor_index = {p: i for i, p in enumerate(lorentz_pairs)}

    def L(mu, nu):
        """Basis index and orientation sign of L_{mu nu}; None if mu == nu."""
        if mu == nu:
            return None
        if mu < nu:
            return lor_index[(mu, nu)], 1
        return lor_index[(nu, mu)], -1

    f = _zeros(n0, n0, n0)
    R = _zeros(n0, n1, n1)
    Q = _zeros(n1, n1, n1, n0)

    def add_f(i, j, k, val):
        f[i, j, k] += Fraction(val)
        f[j, i, k] -= Fraction(val)

    for (mu, nu), (rho, sigma) in itertools.combinations(lorentz_pairs, 2):
        i, j = lor_index[(mu, nu)], lor_index[(rho, sigma)]
        # [L_{mu nu}, L_{rho sigma}] = eta_{nu sigma} L_{rho mu}
        #   - eta_{mu sigma} L_{rho nu} + eta_{nu rho} L_{mu sigma}
        #   - eta_{mu rho} L_{nu sigma}
        for (a, b), coef in (((rho, mu), eta[nu] if nu == sigma else 0),
                             ((rho, nu), -(eta[mu] if mu == sigma else 0)),
                             ((mu, sigma), eta[nu] if nu == rho else 0),
                             ((nu, sigma), -(eta[mu] if mu == rho else 0))):
            if coef:
                tgt = L(a, b)
                if tgt is not None:
                    add_f(i, j, tgt[0], coef * tgt[1])
    for (mu, nu) in lorentz_pairs:
        i = lor_index[(mu, nu)]
        for rho in range(d):
            # [L_{mu nu}, P_rho] = eta_{nu rho} P_mu - eta_{mu rho} P_nu
            if nu == rho:
                add_f(i, n_lor + rho, n_lor + mu, eta[nu])
            if mu == rho:
                add_f(i, n_lor + rho, n_lor + nu, -eta[mu])
        for rho in range(d):
            # [L_{mu nu}, V_rho] = eta_{nu rho} V_mu - eta_{mu rho} V_nu
            if nu == rho:
                R[i, rho, mu] += Fraction(eta[nu])
            if mu == rho:
                R[i, rho, nu] -= Fraction(eta[mu])
    # [P, V] = 0: R rows for translations stay zero
    for mu, nu, rho in itertools.product(range(d), repeat=3):
        for sigma in range(d):
            val = ((eta[mu] if mu == nu else 0) * (1 if rho == sigma else 0)
                   + (eta[mu] if mu == rho else 0) * (1 if nu == sigma else 0)
                   + (eta[rho] if rho == nu else 0) * (1 if mu == sigma else 0))
            if val:
                Q[mu, nu, rho, n_lor + sigma] = Fraction(val)

    labels0 = tuple(f"L_{{{mu}{nu}}}" for mu, nu in lorentz_pairs) \
        + tuple(f"P_{mu}" for mu in range(d))
    labels1 = tuple(f"V_{mu}" for mu in range(d))
    return StructureConstants3(n0, n1, f, R, Q, labels0, labels1)


def check_against_superspace(sc: StructureConstants3,
                             alg: SuperspaceAlgebra) -> CheckReport:
    """Cross-validate the even sector against the differential realisation.

    Every [L, L] and [L, P] bracket computed by the rewriting engine must
    match the f-contraction from the structure-constant table, and [J,
    theta] must match the R-contraction.
    """
    d = alg.dimension
    lorentz_pairs = list(itertools.combinations(range(d), 2))
    n_lor = len(lorentz_pairs)
    rep = CheckReport("order3.superspace",
                      "engine brackets of the realised L, P match the "
                      "f table; [J, theta] matches the R table")
    with Timer(rep):
        basis = [alg.lorentz(mu, nu) for mu, nu in lorentz_pairs] \
            + [alg.P(mu) for mu in range(d)]
        n0 = len(basis)
        if n0 != sc.dim0 or d != sc.dim1:
            rep.add_residual(("shape",),
                             f"table is {sc.dim0}+{sc.dim1} dimensional, "
                             f"realisation is {n0}+{d}")
            return rep
        for i in range(n0):
            for j in range(i + 1, n0):
                lhs = commutator(basis[i], basis[j])
                rhs = None
                for k in range(n0):
                    coef = sc.f[i, j, k]
                    if coef:
                        term = basis[k].scale(coef)
                        rhs = term if rhs is None else rhs + term
                res = lhs if rhs is None else lhs - rhs
                if res:
                    rep.add_residual((sc.labels0[i], sc.labels0[j]), str(res))
        for idx, (mu, nu) in enumerate(lorentz_pairs):
            for rho in range(d):
                # theta with the index lowered plays the role of V_rho
                lhs = commutator(alg.J(mu, nu), alg.theta_lower(rho))
                rhs = None
                for b in range(d):
                    coef = sc.R[idx, rho, b]
                    if coef:
                        term = alg.theta_lower(b).scale(coef)
                        rhs = term if rhs is None else rhs + term
                res = lhs if rhs is None else lhs - rhs
                if res:
                    rep.add_residual((sc.labels0[idx], f"theta^{rho}"), str(res))
    return rep
