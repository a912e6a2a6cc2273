"""Shifted symmetric algebra S(V[2] + V*[1]) on V = theta + g and its degree-3 bracket.

Generators are pairs ``(family, index)``.  Degrees:

    G (g)        -2   even
    T (theta)    -1   odd
    GS (g*)      -1   odd
    TS (theta*)  -2   even

Monomials are sorted tuples of generators (family order G < T < GS < TS, then
index); odd generators never repeat.
"""

from fractions import Fraction

from .multilinear import scalar

G, T, GS, TS = 0, 1, 2, 3
FAMILY_NAMES = ("G", "Theta", "Gstar", "Thetastar")
FAMILY_BY_NAME = {name: f for f, name in enumerate(FAMILY_NAMES)}
DEGREE = (-2, -1, -1, -2)

__all__ = [
    "G", "T", "GS", "TS", "FAMILY_NAMES", "FAMILY_BY_NAME", "DEGREE",
    "SElement", "gen", "odot", "big_bracket", "degree", "monomial_degree",
    "canonical_monomial", "relabel_dual",
]


def _odd(generator):
    return DEGREE[generator[0]] % 2 == 1


def monomial_degree(mono):
    return sum(DEGREE[f] for f, _ in mono)


def canonical_monomial(seq):
    """Sort generators with Koszul signs; (0, None) if an odd generator repeats."""
    seq = list(seq)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            if _odd(seq[j - 1]) and _odd(seq[j]):
                sign = -sign
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            j -= 1
    for a, b in zip(seq, seq[1:]):
        if a == b and _odd(a):
            return 0, None
    return sign, tuple(seq)


class SElement:
    """Immutable sparse element of the shifted symmetric algebra."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = scalar(c)
            if not c:
                continue
            for f, i in mono:
                if f not in (G, T, GS, TS) or i < 0:
                    raise ValueError(f"bad generator {(f, i)}")
            sign, canon = canonical_monomial(mono)
            if sign:
                clean[canon] = clean.get(canon, 0) + sign * c
        object.__setattr__(self, "terms", {m: c for m, c in clean.items() if c})
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "terms", {m: c for m, c in terms.items() if c})
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("SElement is immutable")

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SElement._raw(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return SElement._raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, k):
        k = scalar(k)
        return SElement._raw({m: k * c for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, SElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def coefficient(self, mono):
        sign, canon = canonical_monomial(mono)
        if not sign:
            return Fraction(0)
        return sign * self.terms.get(canon, Fraction(0))

    def project(self, shape):
        """Terms whose family multiset equals ``shape`` (a sorted tuple of families)."""
        shape = tuple(sorted(shape))
        return SElement._raw({m: c for m, c in self.terms.items()
                              if tuple(f for f, _ in m) == shape})

    def shapes(self):
        return sorted({tuple(f for f, _ in m) for m in self.terms})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*" + ".".join(f"{FAMILY_NAMES[f]}{i}" for f, i in m)
                          for m, c in self.items())


def gen(family, index):
    """The generator (family, index) as an element."""
    return SElement._raw({((family, index),): Fraction(1)})


def odot(a, b):
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            sign, mono = canonical_monomial(ma + mb)
            if sign:
                out[mono] = out.get(mono, 0) + sign * ca * cb
    return SElement._raw(out)


def degree(a):
    """Total degree of a homogeneous element; None for zero; 'inhomogeneous' otherwise."""
    degs = {monomial_degree(m) for m in a.terms}
    if not degs:
        return None
    if len(degs) > 1:
        return "inhomogeneous"
    return degs.pop()


def _pairing(a, b):
    """Bracket of two generators (a scalar)."""
    if a[1] != b[1]:
        return 0
    fa, fb = a[0], b[0]
    # {v, e} = (-1)^|v| <v, e>; the reverse order follows from antisymmetry
    if (fa, fb) == (G, GS):
        return 1
    if (fa, fb) == (T, TS):
        return -1
    if (fa, fb) == (GS, G):
        return -1
    if (fa, fb) == (TS, T):
        return 1
    return 0


def _gen_bracket_mono(g, mono):
    """{g, a1...an} for a generator g by the Leibniz rule; list of (sign*scalar, monomial)."""
    shift = (DEGREE[g[0]] + 3) % 2
    out = []
    prefix = 0
    for i, a in enumerate(mono):
        p = _pairing(g, a)
        if p:
            sign = -1 if (shift and prefix % 2) else 1
            out.append((sign * p, mono[:i] + mono[i + 1:]))
        prefix += DEGREE[a[0]]
    return out


def _mono_bracket_gen(mono, b):
    """{a1...an, b} for a generator b via graded antisymmetry."""
    da = monomial_degree(mono)
    sign = -1 if ((da + 3) * (DEGREE[b[0]] + 3)) % 2 == 0 else 1
    return [(sign * c, m) for c, m in _gen_bracket_mono(b, mono)]


def _mono_bracket(ma, mb):
    """{A, B} for monomials, expanding the Leibniz rule in the second slot."""
    da = monomial_degree(ma)
    shift = (da + 3) % 2
    out = {}
    prefix = 0
    for j, b in enumerate(mb):
        inner = _mono_bracket_gen(ma, b)
        if inner:
            sign = -1 if (shift and prefix % 2) else 1
            head, tail = mb[:j], mb[j + 1:]
            for c, m in inner:
                s, canon = canonical_monomial(head + m + tail)
                if s:
                    out[canon] = out.get(canon, 0) + sign * s * c
        prefix += DEGREE[b[0]]
    return out


def big_bracket(a, b):
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            for m, c in _mono_bracket(ma, mb).items():
                out[m] = out.get(m, 0) + c * ca * cb
    return SElement._raw(out)


_DUAL_FAMILY = {G: TS, TS: G, T: GS, GS: T}


def relabel_dual(a):
    """Exchange the roles of (g, theta) and (theta*, g*).

    G <-> Thetastar and Theta <-> Gstar, index preserved.  This is a bracket
    isomorphism, turning a coalgebra element on theta -> g into an algebra
    element on g* -> theta*.
    """
    out = {}
    for m, c in a.terms.items():
        sign, canon = canonical_monomial([(_DUAL_FAMILY[f], i) for f, i in m])
        if sign:
            out[canon] = out.get(canon, 0) + sign * c
    return SElement._raw(out)
