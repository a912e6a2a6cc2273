"""Infinitesimal data of multiplicative polyvector fields on a crossed module.

A pair (omega, delta) of degree k has omega: theta -> wedge^k theta and
delta: g -> g ^ wedge^(k-1) theta.  Both are stored on generators only and
extended as derivations on demand, with omega(g) = 0 and delta(theta) = 0.
"""

from itertools import combinations, combinations_with_replacement, product

from .bigbracket import big_bracket
from .classical import StructureMaps, encode
from .multilinear import (LinearMap, basis, extend_derivation, interior, project_bigrade,
                          pullback, series_operator, zero)
from .report import Report
from .structures import is_crossed_module, semidirect_product

__all__ = [
    "InfinitesimalPair", "QuasiTriple", "in_W_k", "check_ID", "a_k_bracket",
    "build_partial", "is_k_differential", "differential_commutator",
    "check_quasi_triple", "cocycle_check", "coboundary_pair", "cocycle_bracket",
    "lift_to_semidirect",
]


def _koszul(k1, k2):
    return -1 if ((k1 - 1) * (k2 - 1)) % 2 else 1


def _combine(*maps):
    """Sum of maps defined on disjoint generator sets (same degree)."""
    first = maps[0]
    images = {}
    for m in maps:
        if m.degree != first.degree:
            raise ValueError("cannot combine maps of different degrees")
        for i, v in m.images.items():
            images[i] = images.get(i, zero(first.space)) + v
    return LinearMap(first.space, first.degree, images)


class InfinitesimalPair:
    """(omega, delta) of degree k on a crossed module; k = 0 is the A_0 case.

    For k = 0, omega takes scalar values (a covector on theta) and delta is zero.
    """

    def __init__(self, cm, k, omega=None, delta=None):
        if k < 0:
            raise ValueError("k must be non-negative")
        sp = cm.space
        self.cm = cm
        self.k = k
        self.omega = omega if omega is not None else LinearMap(sp, k)
        self.delta = delta if delta is not None else LinearMap(sp, k)
        for name, m, domain, grade in (
                ("omega", self.omega, set(sp.theta_indices()), (0, k)),
                ("delta", self.delta, set(sp.g_indices()), (1, k - 1))):
            if m.space != sp or m.degree != k:
                raise ValueError(f"{name} must be a degree-{k} map on {sp}")
            if not set(m.images) <= domain:
                raise ValueError(f"{name} is defined outside its source")
            for img in m.images.values():
                if img.bigrades() != {grade}:
                    raise ValueError(f"{name} takes values outside bigrade {grade}")
        if k == 0 and self.delta:
            raise ValueError("an A_0 pair has delta = 0")

    @property
    def space(self):
        return self.cm.space

    def combined(self):
        """omega + delta as one map on all generators."""
        return _combine(self.omega, self.delta)

    def __eq__(self, other):
        if not isinstance(other, InfinitesimalPair):
            return NotImplemented
        return (self.k, self.omega, self.delta) == (other.k, other.omega, other.delta) \
            and self.cm.space == other.cm.space

    def __add__(self, other):
        if other.k != self.k:
            raise ValueError("cannot add pairs of different degree")
        return InfinitesimalPair(self.cm, self.k, self.omega + other.omega, self.delta + other.delta)

    def __mul__(self, c):
        return InfinitesimalPair(self.cm, self.k, self.omega * c, self.delta * c)

    __rmul__ = __mul__

    def __repr__(self):
        return f"InfinitesimalPair(k={self.k}, omega={self.omega!r}, delta={self.delta!r})"


class QuasiTriple:
    """(omega, delta, eta) of degrees (2, 2, 3) on a crossed module."""

    def __init__(self, cm, omega=None, delta=None, eta=None):
        self.pair = InfinitesimalPair(cm, 2, omega, delta)
        sp = cm.space
        self.eta = eta if eta is not None else LinearMap(sp, 3)
        if self.eta.space != sp or self.eta.degree != 3:
            raise ValueError("eta must be a degree-3 map")
        if not set(self.eta.images) <= set(sp.g_indices()):
            raise ValueError("eta is defined outside g")
        for img in self.eta.images.values():
            if img.bigrades() != {(0, 3)}:
                raise ValueError("eta must take values in wedge^3 theta")

    cm = property(lambda self: self.pair.cm)
    omega = property(lambda self: self.pair.omega)
    delta = property(lambda self: self.pair.delta)

    def maps(self):
        cm = self.cm
        return StructureMaps(cm.space, phi=cm.phi, bracket=cm.g_bracket, action=cm.action,
                             omega=self.omega, delta=self.delta, eta=self.eta)

    def classification(self):
        return "strict" if not self.eta else "quasi"

    def __repr__(self):
        return f"QuasiTriple(omega={self.omega!r}, delta={self.delta!r}, eta={self.eta!r})"


# -- W_k ----------------------------------------------------------------------

def _w_k_residual(cm, w, i, j):
    z1, z2 = {i: 1}, {j: 1}
    p1, p2 = pullback(cm.phi, z1), pullback(cm.phi, z2)
    return interior(z1, interior(p2, w)) + interior(z2, interior(p1, w))


def in_W_k(w, k, cm):
    """Report on iota_z1 iota_{phi* z2} w = -iota_z2 iota_{phi* z1} w over dual-basis pairs."""
    if w and w.bigrades() != {(1, k - 1)}:
        raise ValueError(f"expected an element of bigrade (1, {k - 1})")
    report = Report(f"W_{k} membership")
    gi = list(cm.space.g_indices())
    report.check("W_k-symmetry", lambda i, j: _w_k_residual(cm, w, i, j),
                 list(combinations_with_replacement(gi, 2)))
    return report.finish()


# -- ID1-ID3 ------------------------------------------------------------------

def lift_to_semidirect(cm):
    return semidirect_product(cm, check=False)


def _cocycle_residual(lie, m, i, j):
    """m[x, y] - [x, m y] + [y, m x] for generator indices i, j."""
    x, y = lie.vector(i), lie.vector(j)
    return (extend_derivation(m, lie.bracket(x, y))
            - lie.bracket(x, m(j)) + lie.bracket(y, m(i)))


def check_ID(p):
    """ID1, ID2 (cocycle and W_k membership, reported separately) and ID3."""
    cm, k = p.cm, p.k
    sp = cm.space
    lie = lift_to_semidirect(cm)
    gi, ti = list(sp.g_indices()), list(sp.theta_indices())
    report = Report(f"A_{k} conditions")
    if k == 0:
        report.check_value("A0-delta-vanishes", lambda: p.delta)
        report.check("A0-omega-kills-action",
                     lambda i, q: p.omega.apply(cm.act(basis(sp, i), basis(sp, q))),
                     list(product(gi, ti)))
        return report.finish()
    report.check("ID1 D_phi.omega = delta.phi",
                 lambda q: extend_derivation(cm.phi, p.omega(q)) - p.delta.apply(cm.ph(basis(sp, q))),
                 ti)
    report.check("ID2 delta cocycle", lambda i, j: _cocycle_residual(lie, p.delta, i, j),
                 list(combinations(gi, 2)))
    report.check("ID2 delta in W_k",
                 lambda a, i, j: _w_k_residual(cm, p.delta(a), i, j),
                 [(a, i, j) for a in gi for i, j in combinations_with_replacement(gi, 2)])

    def id3(i, q):
        x, u = basis(sp, i), basis(sp, q)
        lhs = lie.bracket(x, p.omega(q)) - p.omega.apply(cm.act(x, u))
        return lhs - project_bigrade(lie.bracket(u, p.delta(i)), 0, k)

    report.check("ID3 action compatibility", id3, list(product(gi, ti)))
    return report.finish()


def a_k_bracket(p1, p2):
    """The graded bracket of A_{k1} and A_{k2}, landing in A_{k1+k2-1}."""
    if p1.cm.space != p2.cm.space:
        raise ValueError("pairs live on different crossed modules")
    sp = p1.space
    s = _koszul(p1.k, p2.k)
    k3 = p1.k + p2.k - 1
    if k3 < 0:
        raise ValueError("the bracket of two A_0 pairs is not defined")
    o1, o2 = p1.omega, p2.omega
    omega = {}
    for q in sp.theta_indices():
        v = extend_derivation(o1, o2(q)) - s * extend_derivation(o2, o1(q))
        if v:
            omega[q] = v
    c1, c2 = p1.combined(), p2.combined()
    delta = {}
    for i in sp.g_indices():
        v = extend_derivation(c1, p2.delta(i)) - s * extend_derivation(c2, p1.delta(i))
        if v:
            delta[i] = v
    return InfinitesimalPair(p1.cm, k3, LinearMap(sp, k3, omega), LinearMap(sp, k3, delta))


def build_partial(p, check=True):
    """The k-differential d(u) = omega(u), d(x) = ((1 - exp(-D_phi)) / D_phi) delta(x)."""
    if check:
        rep = check_ID(p)
        if not rep.passed:
            raise ValueError(f"pair fails {rep.failing_identities()}")
    images = dict(p.omega.images)
    for i, v in p.delta.images.items():
        images[i] = series_operator(p.cm, v, p.k)
    return LinearMap(p.space, p.k, images)


def is_k_differential(d, lie, k):
    """d[X, Y] = [dX, Y] + [X, dY] on all basis pairs of ``lie``."""
    if d.space != lie.space or d.degree != k:
        raise ValueError(f"expected a degree-{k} map on {lie.space}")
    report = Report(f"{k}-differential")

    def residual(i, j):
        x, y = lie.vector(i), lie.vector(j)
        return extend_derivation(d, lie.bracket(x, y)) - lie.bracket(d(i), y) - lie.bracket(x, d(j))

    report.check("differential-cocycle", residual, list(combinations(range(lie.dim), 2)))
    return report.finish()


def differential_commutator(d1, d2, k1, k2, lie, check=True):
    """[d1, d2] = d1 o d2 - (-1)^((k1-1)(k2-1)) d2 o d1 on generators."""
    if check:
        for d, k in ((d1, k1), (d2, k2)):
            rep = is_k_differential(d, lie, k)
            if not rep.passed:
                raise ValueError(f"input is not a {k}-differential")
    s = _koszul(k1, k2)
    k3 = k1 + k2 - 1
    images = {}
    for i in range(lie.dim):
        v = extend_derivation(d1, d2(i)) - s * extend_derivation(d2, d1(i))
        if v:
            images[i] = v
    return LinearMap(lie.space, k3, images)


# -- cocycles -----------------------------------------------------------------

def cocycle_check(lam, cm):
    """lam[x, y] = x |> lam(y) - y |> lam(x) for lam: g -> wedge^l theta."""
    sp = cm.space
    if not set(lam.images) <= set(sp.g_indices()):
        raise ValueError("a cocycle is defined on g")
    for img in lam.images.values():
        if img.bigrades() != {(0, lam.degree)}:
            raise ValueError("a cocycle takes values in wedge theta")
    lie = lift_to_semidirect(cm)
    report = Report("1-cocycle")
    report.check("cocycle", lambda i, j: _cocycle_residual(lie, lam, i, j),
                 list(combinations(list(sp.g_indices()), 2)))
    return report.finish()


def coboundary_pair(lam, cm):
    """(lam o phi, D_phi o lam), the infinitesimal of a cocycle lam: g -> wedge^l theta."""
    sp = cm.space
    l = lam.degree
    omega = {}
    for q in sp.theta_indices():
        v = lam.apply(cm.ph(basis(sp, q)))
        if v:
            omega[q] = v
    delta = {}
    for i, v in lam.images.items():
        w = extend_derivation(cm.phi, v)
        if w:
            delta[i] = w
    return InfinitesimalPair(cm, l, LinearMap(sp, l, omega), LinearMap(sp, l, delta))


def cocycle_bracket(p, lam):
    """sigma = omega o lam - (-1)^((k-1)(l-1)) lam o delta for p in A_k, lam of degree l."""
    sp = p.space
    s = _koszul(p.k, lam.degree)
    deg = p.k + lam.degree - 1
    images = {}
    for i in sp.g_indices():
        v = extend_derivation(p.omega, lam(i)) - s * extend_derivation(lam, p.delta(i))
        if v:
            images[i] = v
    return LinearMap(sp, deg, images)


# -- quasi triples ------------------------------------------------------------

def check_quasi_triple(t, cross_check=True):
    """The seven quasi-Lie 2-bialgebra conditions plus delta valued in W_2.

    With ``cross_check`` the verdict is compared against {o + c, o + c} = 0;
    a disagreement is itself reported as a violation.
    """
    cm = t.cm
    sp = cm.space
    om, de, et = t.omega, t.delta, t.eta
    lie = lift_to_semidirect(cm)
    D = lambda a: extend_derivation(cm.phi, a)
    od = _combine(om, de)
    gi, ti = list(sp.g_indices()), list(sp.theta_indices())
    report = Report("quasi-Lie 2-bialgebra triple")
    report.check("(1) D_phi.omega = delta.phi",
                 lambda q: D(om(q)) - de.apply(cm.ph(basis(sp, q))), ti)
    report.check("(2) omega^2 = eta.phi",
                 lambda q: extend_derivation(om, om(q)) - et.apply(cm.ph(basis(sp, q))), ti)
    report.check("(3) (omega+delta).delta = D_phi.eta",
                 lambda i: extend_derivation(od, de(i)) - D(et(i)), gi)
    report.check("(4) omega.eta = eta.delta",
                 lambda i: extend_derivation(om, et(i)) - extend_derivation(et, de(i)), gi)
    report.check("(5) eta cocycle", lambda i, j: _cocycle_residual(lie, et, i, j),
                 list(combinations(gi, 2)))
    report.check("(6) delta cocycle", lambda i, j: _cocycle_residual(lie, de, i, j),
                 list(combinations(gi, 2)))

    def seventh(i, q):
        x, u = basis(sp, i), basis(sp, q)
        lhs = lie.bracket(x, om(q)) - om.apply(cm.act(x, u))
        return lhs - project_bigrade(lie.bracket(u, de(i)), 0, 2)

    report.check("(7) action compatibility", seventh, list(product(gi, ti)))
    report.check("delta in W_2", lambda a, i, j: _w_k_residual(cm, de(a), i, j),
                 [(a, i, j) for a in gi for i, j in combinations_with_replacement(gi, 2)])
    report.classification = t.classification()
    if cross_check:
        seven = report.passed
        element = encode(t.maps(), "bialgebra")
        tt = big_bracket(element, element)
        if tt:
            report.notes.append("{o+c,o+c} is nonzero")
        if seven != (not tt):
            if is_crossed_module(cm).passed:
                report.fail("route-agreement", (), f"seven conditions={seven} bracket={not tt}")
            else:
                report.notes.append("base is not a crossed module; routes not compared")
    return report.finish()
