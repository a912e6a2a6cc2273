"""Exact sparse exterior algebra over a split space g + theta.

Every space carries a basis split into a g-block followed by a theta-block, so
the same machinery serves g alone (theta_dim == 0), theta alone (g_dim == 0)
and the semidirect product.  Multivectors are dictionaries from strictly
increasing index tuples to Fractions with zero coefficients pruned.
"""

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

Scalar = Fraction

__all__ = [
    "Scalar", "scalar", "Space", "Multivector", "LieAlgebra", "LinearMap",
    "basis", "zero", "wedge", "wedge_all", "interior", "schouten",
    "extend_derivation", "d_phi", "series_operator", "inverse_series_operator",
    "project_bigrade", "pullback", "pair", "canonical_sign",
]


def scalar(value):
    """Coerce ints, Fractions and "p/q" strings to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c.isspace() for c in text) or "." in text or "e" in text.lower():
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def canonical_sign(seq):
    """Sort a sequence of distinct indices; return (sign, sorted tuple).

    Returns (0, None) when an index repeats.
    """
    seq = list(seq)
    n = len(seq)
    if len(set(seq)) != n:
        return 0, None
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, n):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(seq)


@dataclass(frozen=True)
class Space:
    """Based space with ``g_dim`` g-vectors followed by ``theta_dim`` theta-vectors."""

    g_dim: int
    theta_dim: int

    def __post_init__(self):
        if self.g_dim < 0 or self.theta_dim < 0:
            raise ValueError("dimensions must be non-negative")

    @property
    def dim(self):
        return self.g_dim + self.theta_dim

    def is_g(self, i):
        return i < self.g_dim

    def theta(self, j):
        """Global index of the j-th theta basis vector."""
        return self.g_dim + j

    def g_indices(self):
        return range(self.g_dim)

    def theta_indices(self):
        return range(self.g_dim, self.dim)

    def bigrade(self, monomial):
        ng = bisect_left(monomial, self.g_dim)
        return ng, len(monomial) - ng


class Multivector:
    """Immutable element of the exterior algebra of ``space``."""

    __slots__ = ("space", "terms", "_hash")

    def __init__(self, space, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(mono)
                if any(not (0 <= i < space.dim) for i in mono):
                    raise ValueError(f"index out of range in {mono} for {space}")
                if any(mono[k] >= mono[k + 1] for k in range(len(mono) - 1)):
                    raise ValueError(f"monomial {mono} is not strictly increasing")
                coeff = scalar(coeff)
                if coeff:
                    clean[mono] = clean.get(mono, 0) + coeff
            clean = {m: c for m, c in clean.items() if c}
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, space, terms):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "space", space)
        object.__setattr__(obj, "terms", {m: c for m, c in terms.items() if c})
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    def _check(self, other):
        if not isinstance(other, Multivector):
            raise TypeError(f"expected Multivector, got {type(other).__name__}")
        if other.space != self.space:
            raise ValueError(f"ambient mismatch: {self.space} vs {other.space}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector._raw(self.space, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return Multivector._raw(self.space, out)

    def __neg__(self):
        return Multivector._raw(self.space, {m: -c for m, c in self.terms.items()})

    def __mul__(self, k):
        k = scalar(k)
        return Multivector._raw(self.space, {m: k * c for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.space, frozenset(self.terms.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def degrees(self):
        return {len(m) for m in self.terms}

    def degree(self):
        """Exterior degree; None for zero, ValueError when inhomogeneous."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous multivector with degrees {sorted(degs)}")
        return degs.pop()

    def bigrades(self):
        return {self.space.bigrade(m) for m in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.items():
            name = "^".join(_basis_name(self.space, i) for i in mono) or "1"
            parts.append(f"{c}*{name}")
        return " + ".join(parts)


def _basis_name(space, i):
    return f"x{i}" if space.is_g(i) else f"u{i - space.g_dim}"


def zero(space):
    return Multivector._raw(space, {})


def basis(space, *indices):
    """Wedge of basis vectors e_{i1} ^ ... ^ e_{ik} (global indices)."""
    sign, mono = canonical_sign(indices)
    if not sign:
        return zero(space)
    if any(not (0 <= i < space.dim) for i in mono):
        raise ValueError(f"index out of range: {indices}")
    return Multivector._raw(space, {mono: Fraction(sign)})


def _merge(a, b):
    """Sign and merged tuple for e_a ^ e_b, or (0, None)."""
    inv = 0
    for i in a:
        pos = bisect_left(b, i)
        if pos < len(b) and b[pos] == i:
            return 0, None
        inv += pos
    return (-1) ** inv, tuple(sorted(a + b))


def wedge(a, b):
    a._check(b)
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            sign, mono = _merge(ma, mb)
            if sign:
                out[mono] = out.get(mono, 0) + sign * ca * cb
    return Multivector._raw(a.space, out)


def wedge_all(space, factors):
    result = Multivector._raw(space, {(): Fraction(1)})
    for f in factors:
        result = wedge(result, f)
    return result


def interior(zeta, a):
    """Left contraction by the covector ``zeta`` (dict index -> scalar).

    i_zeta(v1^...^vk) = sum_i (-1)^(i-1) <zeta, v_i> v1^..^(omit v_i)^..^vk
    """
    out = {}
    for mono, c in a.terms.items():
        for pos, idx in enumerate(mono):
            z = zeta.get(idx)
            if z:
                rest = mono[:pos] + mono[pos + 1:]
                coeff = c * z if pos % 2 == 0 else -c * z
                out[rest] = out.get(rest, 0) + coeff
    return Multivector._raw(a.space, out)


def pullback(phi, zeta):
    """phi^* zeta for phi a map theta -> g given as a LinearMap of degree 1."""
    out = {}
    for j, img in phi.images.items():
        val = sum((zeta.get(m[0], 0) * c for m, c in img.terms.items()), Fraction(0))
        if val:
            out[j] = val
    return out


def pair(covectors, w):
    """<k1^...^kp, w> with the determinant convention (no 1/p!)."""
    p = len(covectors)
    total = Fraction(0)
    for mono, c in w.terms.items():
        if len(mono) != p:
            continue
        acc = Fraction(0)
        for perm in permutations(range(p)):
            sign = canonical_sign(perm)[0]
            prod = Fraction(sign)
            for a, b in enumerate(perm):
                v = covectors[a].get(mono[b], 0)
                if not v:
                    prod = 0
                    break
                prod *= v
            acc += prod
        total += c * acc
    return total


class LieAlgebra:
    """Structure constants [e_i, e_j] = sum_k c^k_ij e_k on a based space."""

    __slots__ = ("space", "table")

    def __init__(self, space, constants=None):
        table = {}
        seen = {}
        for (i, j, k), c in (constants or {}).items():
            c = scalar(c)
            for idx in (i, j, k):
                if not (0 <= idx < space.dim):
                    raise ValueError(f"structure constant index {(i, j, k)} out of range")
            if i == j:
                if c:
                    raise ValueError(f"[e{i}, e{i}] must vanish")
                continue
            key = (min(i, j), max(i, j), k)
            val = c if i < j else -c
            if key in seen and seen[key] != val:
                raise ValueError(f"constants at {(i, j, k)} are not antisymmetric")
            seen[key] = val
        for (i, j, k), c in seen.items():
            if c:
                table.setdefault((i, j), {})[k] = c
        self.space = space
        self.table = table

    @classmethod
    def abelian(cls, space):
        return cls(space, {})

    @property
    def dim(self):
        return self.space.dim

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a dict k -> coefficient."""
        if i < j:
            return self.table.get((i, j), {})
        if i > j:
            return {k: -c for k, c in self.table.get((j, i), {}).items()}
        return {}

    def constants(self):
        """Sorted (i, j, k, c) with i < j."""
        return sorted((i, j, k, c) for (i, j), row in self.table.items() for k, c in row.items())

    def structure_dict(self):
        return {(i, j, k): c for i, j, k, c in self.constants()}

    def bracket(self, a, b):
        return schouten(a, b, self)

    def vector(self, i):
        return basis(self.space, i)

    def jacobi_violations(self):
        """(i, j, k, residual) for every basis triple i<j<k with nonzero Jacobiator."""
        out = []
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    res = self.jacobiator(i, j, k)
                    if res:
                        out.append(((i, j, k), res))
        return out

    def jacobiator(self, i, j, k):
        e = self.vector
        return (self.bracket(self.bracket(e(i), e(j)), e(k))
                + self.bracket(self.bracket(e(j), e(k)), e(i))
                + self.bracket(self.bracket(e(k), e(i)), e(j)))

    def is_lie(self):
        return not self.jacobi_violations()

    def ad_matrix(self, i):
        """Matrix of ad_{e_i} as dict (row k, col j) -> coefficient of e_k in [e_i, e_j]."""
        return {(k, j): c for j in range(self.dim) for k, c in self.bracket_basis(i, j).items()}

    def killing(self, i, j):
        """trace(ad_i ad_j)."""
        total = Fraction(0)
        for m in range(self.dim):
            for l, c in self.bracket_basis(j, m).items():
                total += c * self.bracket_basis(i, l).get(m, 0)
        return total

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.space == other.space and self.table == other.table

    def __hash__(self):
        return hash((self.space, tuple(self.constants())))

    def __repr__(self):
        return f"LieAlgebra({self.space}, {len(self.constants())} constants)"


def schouten(a, b, lie):
    """Schouten bracket on the exterior algebra of ``lie``.

    [a1^..^ap, b1^..^bq] = sum_{i,j} (-1)^(i+j) [ai, bj] ^ a1..^ai..ap ^ b1..^bj..bq,
    so that [a, b^c] = [a,b]^c + (-1)^((|a|-1)|b|) b^[a,c].
    """
    a._check(b)
    if a.space != lie.space:
        raise ValueError(f"ambient mismatch: {a.space} vs Lie algebra on {lie.space}")
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            cab = ca * cb
            for i, ai in enumerate(ma):
                rest_a = ma[:i] + ma[i + 1:]
                for j, bj in enumerate(mb):
                    br = lie.bracket_basis(ai, bj)
                    if not br:
                        continue
                    rest_b = mb[:j] + mb[j + 1:]
                    base = cab if (i + j) % 2 == 0 else -cab
                    for k, c in br.items():
                        sign, mono = canonical_sign((k,) + rest_a + rest_b)
                        if sign:
                            out[mono] = out.get(mono, 0) + sign * base * c
    return Multivector._raw(a.space, out)


class LinearMap:
    """Linear map on degree-one generators with values of exterior degree ``degree``.

    Generators missing from ``images`` are sent to zero.
    """

    __slots__ = ("space", "degree", "images")

    def __init__(self, space, degree, images=None):
        clean = {}
        for i, img in (images or {}).items():
            if not (0 <= i < space.dim):
                raise ValueError(f"generator {i} out of range for {space}")
            if img.space != space:
                raise ValueError(f"image of generator {i} lives in {img.space}, expected {space}")
            if img and img.degrees() != {degree}:
                raise ValueError(f"image of generator {i} is not of exterior degree {degree}")
            if img:
                clean[i] = img
        self.space = space
        self.degree = degree
        self.images = clean

    def __call__(self, i):
        return self.images.get(i, zero(self.space))

    def apply(self, v):
        """Linear extension to a degree-one multivector."""
        out = zero(self.space)
        for mono, c in v.terms.items():
            if len(mono) != 1:
                raise ValueError("apply expects a degree-one vector; use derivation()")
            out = out + c * self(mono[0])
        return out

    def derivation(self, a):
        return extend_derivation(self, a)

    def restrict(self, indices):
        keep = set(indices)
        return LinearMap(self.space, self.degree, {i: v for i, v in self.images.items() if i in keep})

    def __add__(self, other):
        if (other.space, other.degree) != (self.space, self.degree):
            raise ValueError("cannot add maps of different shape")
        keys = set(self.images) | set(other.images)
        return LinearMap(self.space, self.degree, {i: self(i) + other(i) for i in keys})

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, k):
        return LinearMap(self.space, self.degree, {i: v * k for i, v in self.images.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.space, self.degree, self.images) == (other.space, other.degree, other.images)

    def __hash__(self):
        return hash((self.space, self.degree, frozenset(self.images.items())))

    def __bool__(self):
        return bool(self.images)

    def __repr__(self):
        body = ", ".join(f"{_basis_name(self.space, i)} -> {v!r}" for i, v in sorted(self.images.items()))
        return f"LinearMap(deg {self.degree}: {body})"


def extend_derivation(m, a):
    """Derivation of degree ``m.degree - 1`` extending ``m`` (Koszul signs)."""
    if not isinstance(m, LinearMap):
        raise TypeError("extend_derivation needs a LinearMap defined on generators")
    if a.space != m.space:
        raise ValueError(f"ambient mismatch: {a.space} vs {m.space}")
    odd = (m.degree - 1) % 2 == 1
    out = {}
    for mono, c in a.terms.items():
        for pos, idx in enumerate(mono):
            img = m.images.get(idx)
            if img is None:
                continue
            base = -c if (odd and pos % 2 == 1) else c
            head, tail = mono[:pos], mono[pos + 1:]
            for t, ct in img.terms.items():
                sign, merged = canonical_sign(head + t + tail)
                if sign:
                    out[merged] = out.get(merged, 0) + sign * base * ct
    return Multivector._raw(a.space, out)


def d_phi(cm, a):
    """The degree-zero derivation u -> phi(u), x -> 0 on the semidirect product."""
    return extend_derivation(cm.phi_map, a)


def _phi_of(cm_or_map):
    return cm_or_map if isinstance(cm_or_map, LinearMap) else cm_or_map.phi_map


def series_operator(cm, a, k=None):
    """(1 - exp(-D)) / D applied to ``a``: sum_i (-1)^i / (i+1)! D^i a.

    D is nilpotent on each exterior degree, so the sum terminates exactly.
    ``k``, when given, is the exterior degree ``a`` must have.
    """
    phi = _phi_of(cm)
    _check_homogeneous(a, k)
    result = zero(a.space)
    term = a
    i = 0
    while term:
        result = result + term * Fraction((-1) ** i, factorial(i + 1))
        term = extend_derivation(phi, term)
        i += 1
    return result


def _bernoulli_plus(n):
    """Bernoulli numbers with B_1 = +1/2 (coefficients of x / (1 - exp(-x)))."""
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(Fraction(factorial(m + 1), factorial(j) * factorial(m + 1 - j)) * b[j]
                      for j in range(m)) / (m + 1))
    if n >= 1:
        b[1] = Fraction(1, 2)
    return b


def inverse_series_operator(cm, a, k=None):
    """D / (1 - exp(-D)) applied to ``a``; two-sided inverse of series_operator."""
    phi = _phi_of(cm)
    _check_homogeneous(a, k)
    powers = []
    term = a
    while term:
        powers.append(term)
        term = extend_derivation(phi, term)
    bern = _bernoulli_plus(len(powers))
    result = zero(a.space)
    for i, p in enumerate(powers):
        result = result + p * (bern[i] / factorial(i))
    return result


def _check_homogeneous(a, k):
    degs = a.degrees()
    if len(degs) > 1:
        raise ValueError(f"non-homogeneous input with exterior degrees {sorted(degs)}")
    if k is not None and degs and degs != {k}:
        raise ValueError(f"expected exterior degree {k}, got {degs.pop()}")


def project_bigrade(a, g_count, theta_count):
    space = a.space
    return Multivector._raw(space, {m: c for m, c in a.terms.items()
                                    if space.bigrade(m) == (g_count, theta_count)})
