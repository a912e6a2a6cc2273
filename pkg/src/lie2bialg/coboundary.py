"""r-matrices on crossed modules and the coboundary (quasi-)Lie 2-bialgebras they generate."""

from fractions import Fraction
from itertools import combinations

from .classical import StructureMaps
from .calculus import QuasiTriple, cocycle_check, lift_to_semidirect
from .multilinear import (LinearMap, Multivector, Space, basis, extend_derivation, pair,
                          pullback)
from .report import Report
from .structures import CrossedModule, LieBialgebraCrossedModule

__all__ = [
    "RMatrix", "is_r_matrix", "lambda_r", "coboundary_triple", "general_cocycle_triple",
    "dual_crossed_module",
]


class RMatrix:
    """A candidate r in wedge^2 theta on a crossed module."""

    def __init__(self, cm, r):
        if r.space != cm.space:
            raise ValueError("r lives on a different space")
        if r and r.bigrades() != {(0, 2)}:
            raise ValueError("r must lie in wedge^2 theta")
        self.cm = cm
        self.r = r

    def schouten_square(self):
        return lift_to_semidirect(self.cm).bracket(self.r, self.r)

    def __repr__(self):
        return f"RMatrix({self.r!r})"


def _as_rmatrix(r, cm=None):
    return r if isinstance(r, RMatrix) else RMatrix(cm, r)


def is_r_matrix(r, cm=None):
    """x |> [r, r] = 0 for every g-basis vector x."""
    r = _as_rmatrix(r, cm)
    lie = lift_to_semidirect(r.cm)
    rr = lie.bracket(r.r, r.r)
    report = Report("r-matrix")
    report.check("[r,r] g-invariant", lambda i: lie.bracket(lie.vector(i), rr),
                 list(r.cm.space.g_indices()))
    return report.finish()


def lambda_r(r, cm=None):
    """The cocycle x -> -x |> r."""
    r = _as_rmatrix(r, cm)
    lie = lift_to_semidirect(r.cm)
    sp = r.cm.space
    images = {}
    for i in sp.g_indices():
        v = -1 * lie.bracket(lie.vector(i), r.r)
        if v:
            images[i] = v
    return LinearMap(sp, 2, images)


def coboundary_triple(r, cm=None):
    """omega_r(u) = [r, u], delta_r(x) = -D_phi(x |> r), eta_r(x) = -1/2 x |> [r, r]."""
    r = _as_rmatrix(r, cm)
    cm = r.cm
    sp = cm.space
    lie = lift_to_semidirect(cm)
    omega = {}
    for q in sp.theta_indices():
        v = lie.bracket(r.r, lie.vector(q))
        if v:
            omega[q] = v
    delta = {}
    d_r = extend_derivation(cm.phi, r.r)
    for i in sp.g_indices():
        x = lie.vector(i)
        v = -1 * extend_derivation(cm.phi, lie.bracket(x, r.r))
        other = -1 * lie.bracket(x, d_r)
        if v != other:
            raise ArithmeticError(f"the two forms of delta_r disagree at x{i}")
        if v:
            delta[i] = v
    rr = lie.bracket(r.r, r.r)
    eta = {}
    for i in sp.g_indices():
        v = lie.bracket(lie.vector(i), rr) * Fraction(-1, 2)
        if v:
            eta[i] = v
    return QuasiTriple(cm, LinearMap(sp, 2, omega), LinearMap(sp, 2, delta), LinearMap(sp, 3, eta))


def general_cocycle_triple(lam, cm, check=True):
    """omega = lam o phi, delta = D_phi o lam, eta = lam o D_phi o lam for a cocycle lam."""
    if lam.degree != 2:
        raise ValueError("lambda must take values in wedge^2 theta")
    if check:
        rep = cocycle_check(lam, cm)
        if not rep.passed:
            raise ValueError("lambda is not a 1-cocycle")
    sp = cm.space
    omega, delta, eta = {}, {}, {}
    for q in sp.theta_indices():
        v = lam.apply(cm.ph(basis(sp, q)))
        if v:
            omega[q] = v
    for i in sp.g_indices():
        d = extend_derivation(cm.phi, lam(i))
        if d:
            delta[i] = d
        e = extend_derivation(lam, d)
        if e:
            eta[i] = e
    return QuasiTriple(cm, LinearMap(sp, 2, omega), LinearMap(sp, 2, delta), LinearMap(sp, 3, eta))


def dual_crossed_module(r, cm=None, check=True):
    """The Lie bialgebra crossed module (theta -> g, g* -> theta*) induced by an r-matrix.

    <[k1, k2]_r, u> = <k1 ^ k2, [r, u]> and <k |> xi, x> = <phi^* xi ^ k, x |> r>,
    with dual map -phi^*.  The g*-bracket is [xi1, xi2] = (-phi^* xi1) |> xi2.
    """
    r = _as_rmatrix(r, cm)
    cm = r.cm
    if check:
        rep = is_r_matrix(r)
        if not rep.passed:
            raise ValueError("r is not an r-matrix")
    sp = cm.space
    n, m = sp.g_dim, sp.theta_dim
    dsp = Space(m, n)
    lie = lift_to_semidirect(cm)
    kappa = lambda j: {sp.theta(j): 1}

    def vec(coeffs):
        return Multivector(dsp, {(i,): c for i, c in coeffs.items() if c})

    ad_r = {j: lie.bracket(r.r, lie.vector(sp.theta(j))) for j in range(m)}
    bracket = {}
    for a, b in combinations(range(m), 2):
        v = vec({j: pair([kappa(a), kappa(b)], ad_r[j]) for j in range(m)})
        if v:
            bracket[(a, b)] = v
    x_r = {q: lie.bracket(lie.vector(q), r.r) for q in range(n)}
    action = {}
    for l in range(m):
        for i in range(n):
            phi_xi = pullback(cm.phi, {i: 1})
            v = vec({m + q: pair([phi_xi, kappa(l)], x_r[q]) for q in range(n)})
            if v:
                action[(l, m + i)] = v
    phi = {}
    for i in range(n):
        v = vec({j: -cm.phi(sp.theta(j)).coefficient((i,)) for j in range(m)})
        if v:
            phi[m + i] = v
    dphi = LinearMap(dsp, 1, phi)
    dual = CrossedModule.from_maps(StructureMaps(dsp, phi=dphi, bracket=bracket, action=action))
    return LieBialgebraCrossedModule(cm, dual)
