"""Standard Lie algebras, crossed modules and random instances used by the catalog and tests."""

import random
from fractions import Fraction
from itertools import combinations

from .classical import StructureMaps
from .multilinear import LieAlgebra, LinearMap, Multivector, Space, basis, zero
from .structures import CrossedModule, LieBialgebraCrossedModule

__all__ = [
    "SL2", "sl2", "gl2", "heisenberg", "abelian", "lie_from_local",
    "identity_crossed_module", "gl2_sl2_projection", "sl2_ideal_in_gl2",
    "abelian_crossed_module", "string_lie2_algebra", "fixed_x_coalgebra",
    "u2_manin", "bialgebra_identity_crossed_module", "coboundary_dual_constants",
    "standard_sl2_bialgebra",
    "random_lie_algebra", "random_structure_maps", "random_vector",
]

# sl(2) in the basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
SL2 = {(0, 1, 1): 2, (0, 2, 2): -2, (1, 2, 0): 1}
# gl(2) in the basis (E11, E12, E21, E22)
GL2 = {(0, 1, 1): 1, (0, 2, 2): -1, (1, 2, 0): 1, (1, 2, 3): -1,
       (1, 3, 1): 1, (2, 3, 2): -1}
# 3-dim Heisenberg: [p, q] = c
HEISENBERG = {(0, 1, 2): 1}


def lie_from_local(space, constants, offset=0):
    """LieAlgebra on ``space`` from constants indexed locally from ``offset``."""
    return LieAlgebra(space, {(i + offset, j + offset, k + offset): c
                              for (i, j, k), c in constants.items()})


def sl2():
    return lie_from_local(Space(3, 0), SL2)


def gl2():
    return lie_from_local(Space(4, 0), GL2)


def heisenberg():
    return lie_from_local(Space(3, 0), HEISENBERG)


def abelian(n):
    return LieAlgebra(Space(n, 0), {})


def _table(space, constants, offset):
    out = {}
    for (i, j, k), c in constants.items():
        a, b = i + offset, j + offset
        key, sign = ((a, b), 1) if a < b else ((b, a), -1)
        out[key] = out.get(key, zero(space)) + basis(space, k + offset) * (sign * c)
    return {k: v for k, v in out.items() if v}


def _ad_action(space, g_consts, n):
    """x_i |> u_j = [x_i, x_j] transported to theta when theta is a copy of g."""
    action = {}
    for (i, j, k), c in g_consts.items():
        for a, b, s in ((i, j, 1), (j, i, -1)):
            key = (a, space.theta(b))
            action[key] = action.get(key, zero(space)) + basis(space, space.theta(k)) * (s * c)
    return {k: v for k, v in action.items() if v}


def identity_crossed_module(constants, dim):
    """theta -> theta with phi = id and the adjoint action."""
    sp = Space(dim, dim)
    phi = LinearMap(sp, 1, {sp.theta(j): basis(sp, j) for j in range(dim)})
    return CrossedModule(sp, _table(sp, constants, 0), _table(sp, constants, dim), phi,
                         _ad_action(sp, constants, dim))


def _matrix_crossed_module(g_basis, theta_basis, g_coords, theta_coords, phi_matrix, bracket):
    """Crossed module of matrix algebras with the commutator action."""
    n, m = len(g_basis), len(theta_basis)
    sp = Space(n, m)

    def gvec(mat):
        return Multivector(sp, {(i,): c for i, c in enumerate(g_coords(mat)) if c})

    def tvec(mat):
        return Multivector(sp, {(sp.theta(j),): c for j, c in enumerate(theta_coords(mat)) if c})

    g_br = {(a, b): gvec(bracket(g_basis[a], g_basis[b])) for a, b in combinations(range(n), 2)}
    t_br = {(sp.theta(a), sp.theta(b)): tvec(bracket(theta_basis[a], theta_basis[b]))
            for a, b in combinations(range(m), 2)}
    action = {(a, sp.theta(j)): tvec(bracket(g_basis[a], theta_basis[j]))
              for a in range(n) for j in range(m)}
    phi = LinearMap(sp, 1, {sp.theta(j): gvec(phi_matrix(theta_basis[j])) for j in range(m)})
    return CrossedModule(sp, g_br, t_br, phi, action)


def _mat(entries):
    return tuple(tuple(Fraction(x) for x in row) for row in entries)


def _commutator(a, b):
    n = len(a)
    mul = lambda p, q: [[sum(p[i][k] * q[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    ab, ba = mul(a, b), mul(b, a)
    return tuple(tuple(ab[i][j] - ba[i][j] for j in range(n)) for i in range(n))


_GL2_BASIS = [_mat([[1, 0], [0, 0]]), _mat([[0, 1], [0, 0]]), _mat([[0, 0], [1, 0]]), _mat([[0, 0], [0, 1]])]
_SL2_BASIS = [_mat([[1, 0], [0, -1]]), _mat([[0, 1], [0, 0]]), _mat([[0, 0], [1, 0]])]


def _gl2_coords(a):
    return [a[0][0], a[0][1], a[1][0], a[1][1]]


def _sl2_coords(a):
    if a[0][0] + a[1][1]:
        raise ValueError("matrix is not traceless")
    return [a[0][0], a[0][1], a[1][0]]


def _traceless(a):
    t = (a[0][0] + a[1][1]) / 2
    return _mat([[a[0][0] - t, a[0][1]], [a[1][0], a[1][1] - t]])


def gl2_sl2_projection():
    """theta = gl(2) -> g = sl(2), phi(A) = A - (tr A / 2) Id, adjoint action."""
    return _matrix_crossed_module(_SL2_BASIS, _GL2_BASIS, _sl2_coords, _gl2_coords,
                                  _traceless, _commutator)


def sl2_ideal_in_gl2():
    """theta = sl(2) included as an ideal of g = gl(2)."""
    return _matrix_crossed_module(_GL2_BASIS, _SL2_BASIS, _gl2_coords, _sl2_coords,
                                  lambda a: a, _commutator)


def abelian_crossed_module(n, m):
    return CrossedModule(Space(n, m))


def string_lie2_algebra(hbar=1):
    """theta = R -> sl(2) with phi = 0, no action and h(x, y, z) = hbar K(x, [y, z])."""
    hbar = Fraction(hbar)
    sp = Space(3, 1)
    lie = sl2()
    bracket = _table(sp, SL2, 0)
    h = {}
    for i, j, k in combinations(range(3), 3):
        yz = lie.bracket_basis(j, k)
        val = sum((c * lie.killing(i, l) for l, c in yz.items()), Fraction(0))
        if val:
            h[(i, j, k)] = basis(sp, sp.theta(0)) * (hbar * val)
    return StructureMaps(sp, bracket=bracket, h=h)


def fixed_x_coalgebra(x=(1, 0, 0)):
    """Weak Lie 2-coalgebra on R -> sl(2) whose only datum is 1 |> xi = ad*_x xi.

    With the dual convention <k |> xi, y> = -<delta(y), xi ^ k> and
    ad*_x xi = -xi o ad_x this is delta(y) = [x, y] ^ u.
    """
    sp = Space(3, 1)
    lie = lie_from_local(sp, SL2)
    xv = Multivector(sp, {(i,): c for i, c in enumerate(x) if c})
    delta = {}
    for i in range(3):
        v = lie.bracket(xv, basis(sp, i))
        w = Multivector(sp, {(k, sp.theta(0)): c for (k,), c in v.terms.items()})
        if w:
            delta[i] = w
    return StructureMaps(sp, delta=LinearMap(sp, 2, delta))


# -- Lie bialgebra examples ---------------------------------------------------

def bialgebra_identity_crossed_module(constants, dual_constants, dim):
    """(theta -> theta, theta* -> theta*) from a Lie bialgebra (theta, theta*).

    The dual crossed module has map -1, target with the opposite bracket and
    action k2 |> k1 = -[k2, k1]; its source keeps the bracket of theta*.
    """
    primal = identity_crossed_module(constants, dim)
    dsp = Space(dim, dim)
    phi = LinearMap(dsp, 1, {dsp.theta(j): -basis(dsp, j) for j in range(dim)})
    opposite = {key: -c for key, c in dual_constants.items()}
    action = {key: -v for key, v in _ad_action(dsp, dual_constants, dim).items()}
    dual = CrossedModule(dsp, _table(dsp, opposite, 0), _table(dsp, dual_constants, dim),
                         phi, action)
    return LieBialgebraCrossedModule(primal, dual)


def coboundary_dual_constants(constants, dim, r):
    """Structure constants of theta* for the cobracket delta(x) = [x, r].

    ``r`` maps local pairs (a, b), a < b, to coefficients of e_a ^ e_b.
    [k_a, k_b] = sum_c (coefficient of e_a ^ e_b in delta(e_c)) k_c.
    """
    sp = Space(dim, 0)
    lie = lie_from_local(sp, constants)
    rv = Multivector(sp, {key: c for key, c in r.items() if c})
    out = {}
    for c in range(dim):
        for (a, b), coeff in lie.bracket(basis(sp, c), rv).terms.items():
            if coeff:
                out[(a, b, c)] = coeff
    return out


def standard_sl2_bialgebra():
    """sl(2) with the cobracket of r = e ^ f, and the dual structure constants."""
    return SL2, coboundary_dual_constants(SL2, 3, {(1, 2): 1})


class _Gauss:
    """Exact Gaussian rational a + b i."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re, self.im = Fraction(re), Fraction(im)

    def __add__(self, o):
        return _Gauss(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return _Gauss(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        return _Gauss(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)


def _cmat(rows):
    return tuple(tuple(_Gauss(*z) if isinstance(z, tuple) else _Gauss(z) for z in row) for row in rows)


def _cmul(a, b):
    return tuple(tuple(_sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def _sum(items):
    out = _Gauss(0)
    for z in items:
        out = out + z
    return out


def _ccomm(a, b):
    ab, ba = _cmul(a, b), _cmul(b, a)
    return tuple(tuple(ab[i][j] - ba[i][j] for j in range(2)) for i in range(2))


def _im_trace(a, b):
    p = _cmul(a, b)
    return p[0][0].im + p[1][1].im


def _solve(rows, rhs):
    """Solve a square nonsingular rational system by Gauss-Jordan elimination."""
    n = len(rows)
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def u2_manin():
    """The u(2) example: theta = upper triangular with real diagonal, g its traceless part.

    phi(A) = A - (tr A / 2) Id.  theta* is identified with u(2) through
    Im Tr(XY); the dual crossed module g* -> theta* follows the pattern of the
    identity example: target bracket opposite to u(2), action k |> xi = -[k, xi],
    and map -phi^*.
    """
    theta = [_cmat([[1, 0], [0, 0]]), _cmat([[0, 0], [0, 1]]),
             _cmat([[0, 1], [0, 0]]), _cmat([[0, (0, 1)], [0, 0]])]
    g = [_cmat([[1, 0], [0, -1]]), _cmat([[0, 1], [0, 0]]), _cmat([[0, (0, 1)], [0, 0]])]
    u2 = [_cmat([[(0, 1), 0], [0, 0]]), _cmat([[0, 0], [0, (0, 1)]]),
          _cmat([[0, 1], [-1, 0]]), _cmat([[0, (0, 1)], [(0, 1), 0]])]

    def theta_coords(a):
        if a[1][0].re or a[1][0].im or a[0][0].im or a[1][1].im:
            raise ValueError("not upper triangular with real diagonal")
        return [a[0][0].re, a[1][1].re, a[0][1].re, a[0][1].im]

    def g_coords(a):
        c = theta_coords(a)
        if c[0] + c[1]:
            raise ValueError("not traceless")
        return [c[0], c[2], c[3]]

    def traceless(a):
        t = (a[0][0] + a[1][1]) * _Gauss(Fraction(1, 2))
        return ((a[0][0] - t, a[0][1]), (a[1][0], a[1][1] - t))

    def to_real(a):
        return tuple(tuple(z for z in row) for row in a)

    primal = _matrix_crossed_module(g, theta, g_coords, theta_coords, traceless, _ccomm)

    # kappa_j in u(2) dual to theta_j under Im Tr
    gram = [[_im_trace(t, s) for s in u2] for t in theta]
    kappas = []
    for j in range(4):
        coeffs = _solve(gram, [Fraction(int(i == j)) for i in range(4)])
        kappas.append(_lin(u2, coeffs))

    def kappa_coords(a):
        return [_im_trace(theta[j], a) for j in range(4)]

    # xi_i in g*: the functional <x_k, xi_i> = delta_ik, realized by a class in u(2)
    # modulo i Id; pick representatives kappa pulled back through phi
    n, m = 3, 4
    dsp = Space(m, n)
    # phi^* xi_i = sum_j <phi(theta_j), xi_i> kappa_j = sum_j (g-coordinate i of phi(theta_j)) kappa_j
    phi_t = [g_coords(traceless(t)) for t in theta]
    pullbacks = [[phi_t[j][i] for j in range(m)] for i in range(n)]

    def kvec(coords):
        return Multivector(dsp, {(j,): c for j, c in enumerate(coords) if c})

    def xvec(coords):
        return Multivector(dsp, {(m + i,): c for i, c in enumerate(coords) if c})

    k_br = {}
    for a, b in combinations(range(m), 2):
        c = kappa_coords(_ccomm(kappas[a], kappas[b]))
        v = kvec([-x for x in c])
        if v:
            k_br[(a, b)] = v
    # kappa |> xi = -[kappa, xi]: evaluate on x_k through the pairing of theta with u(2);
    # <[kappa, Y], x> only depends on Y modulo i Id for x in g
    reps = [_lin(kappas, pullbacks[i]) for i in range(n)]
    action = {}
    for l in range(m):
        for i in range(n):
            c = [-_im_trace(g[k], _ccomm(kappas[l], reps[i])) for k in range(n)]
            v = xvec(c)
            if v:
                action[(l, m + i)] = v
    phi = {m + i: kvec([-x for x in pullbacks[i]]) for i in range(n)}
    dual = CrossedModule.from_maps(StructureMaps(dsp, phi=LinearMap(dsp, 1, phi),
                                                 bracket=k_br, action=action))
    return LieBialgebraCrossedModule(primal, dual)


def _lin(mats, coeffs):
    out = _cmat([[0, 0], [0, 0]])
    for mat, c in zip(mats, coeffs):
        if c:
            out = tuple(tuple(out[i][j] + mat[i][j] * _Gauss(c) for j in range(2)) for i in range(2))
    return out


# -- random instances ---------------------------------------------------------

def random_vector(space, indices, rng, lo=-2, hi=2, density=1.0):
    coeffs = {}
    for i in indices:
        if rng.random() < density:
            c = rng.randint(lo, hi)
            if c:
                coeffs[(i,)] = c
    return Multivector(space, coeffs)


def random_lie_algebra(dim, rng, lo=-2, hi=2, density=0.5, attempts=200):
    """Rejection-sample integer structure constants until Jacobi holds."""
    sp = Space(dim, 0)
    for _ in range(attempts):
        consts = {}
        for i, j in combinations(range(dim), 2):
            for k in range(dim):
                if rng.random() < density:
                    consts[(i, j, k)] = rng.randint(lo, hi)
        lie = LieAlgebra(sp, consts)
        if lie.is_lie():
            return lie
    return LieAlgebra(sp, {})


def random_structure_maps(n, m, rng, components, lo=-2, hi=2, density=0.6):
    """Sparse random classical data in the named components."""
    sp = Space(n, m)
    gi, ti = list(sp.g_indices()), list(sp.theta_indices())
    rv = lambda idx: random_vector(sp, idx, rng, lo, hi, density)

    def rmv(monos):
        return Multivector(sp, {mono: rng.randint(lo, hi) for mono in monos if rng.random() < density})

    data = {}
    if "phi" in components:
        data["phi"] = LinearMap(sp, 1, {j: rv(gi) for j in ti})
    if "bracket" in components:
        data["bracket"] = {key: rv(gi) for key in combinations(gi, 2)}
    if "action" in components:
        data["action"] = {(i, j): rv(ti) for i in gi for j in ti}
    if "h" in components:
        data["h"] = {key: rv(ti) for key in combinations(gi, 3)}
    if "omega" in components:
        data["omega"] = LinearMap(sp, 2, {j: rmv(list(combinations(ti, 2))) for j in ti})
    if "delta" in components:
        data["delta"] = LinearMap(sp, 2, {i: rmv([(a, b) for a in gi for b in ti]) for i in gi})
    if "eta" in components:
        data["eta"] = LinearMap(sp, 3, {i: rmv(list(combinations(ti, 3))) for i in gi})
    return StructureMaps(sp, **data)


def default_rng(seed=0):
    return random.Random(seed)
