"""Built-in examples, each with the verification target it is expected to pass."""

from dataclasses import dataclass, field

from . import algebras
from .coboundary import RMatrix
from .fileio import to_file
from .multilinear import Multivector

__all__ = ["CatalogEntry", "CATALOG", "catalog_names", "get_entry", "export"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    structure: str
    build: object
    description: str
    notes: tuple = field(default=())

    def object(self):
        return self.build()

    def file(self):
        return to_file(self.object(), structure=self.structure, name=self.name,
                       notes=(self.description,) + self.notes)


def _r(cm, pairs):
    sp = cm.space
    return Multivector(sp, {(sp.theta(a), sp.theta(b)): c for (a, b), c in pairs.items()})


def _string_plus_fixed_x():
    s = algebras.string_lie2_algebra(1)
    return s.replace(delta=algebras.fixed_x_coalgebra().delta)


def _identity_bicrossed():
    consts, dual = algebras.standard_sl2_bialgebra()
    return algebras.bialgebra_identity_crossed_module(consts, dual, 3)


def _gl2_r():
    cm = algebras.gl2_sl2_projection()
    return RMatrix(cm, _r(cm, {(1, 2): 1}))


def _ideal_r():
    cm = algebras.sl2_ideal_in_gl2()
    return RMatrix(cm, _r(cm, {(1, 2): 1}))


_ENTRIES = [
    CatalogEntry("string-sl2", "lie2alg", lambda: algebras.string_lie2_algebra(1),
                 "string Lie 2-algebra R -> sl(2), h = K(x, [y, z]) with hbar = 1"),
    CatalogEntry("string-sl2-half", "lie2alg", lambda: algebras.string_lie2_algebra("1/2"),
                 "string Lie 2-algebra R -> sl(2), hbar = 1/2"),
    CatalogEntry("fixed-x-coalgebra", "lie2coalg", algebras.fixed_x_coalgebra,
                 "weak Lie 2-coalgebra on R -> sl(2) with 1 |> xi = ad*_x xi, x = h",
                 ("only the action of theta* on g* is nonzero; eta = 0",)),
    CatalogEntry("weak-bialgebra-string+fixed-x", "lie2bialg", _string_plus_fixed_x,
                 "the string Lie 2-algebra together with the fixed-x coalgebra"),
    CatalogEntry("identity-bicrossed-from-bialgebra", "bicrossed-module", _identity_bicrossed,
                 "(sl2 -> sl2, sl2* -> sl2*) from the Lie bialgebra of r = e ^ f",
                 ("dual map -1, target bracket opposite to sl2*, action k2 |> k1 = -[k2, k1]",)),
    CatalogEntry("u2-manin", "bicrossed-module", algebras.u2_manin,
                 "upper triangular 2x2 with real diagonal -> its traceless part, dual through u(2)",
                 ("phi(A) = A - (tr A / 2) Id: the traceless projection is used as the reading "
                  "of 'A minus its trace'",
                  "theta* is u(2) via Im Tr(XY); g* is u(2) modulo i Id")),
    CatalogEntry("gl2-sl2-projection", "crossed-module", algebras.gl2_sl2_projection,
                 "gl(2) -> sl(2), phi(A) = A - (tr A / 2) Id, adjoint action"),
    CatalogEntry("sl2-ideal-in-gl2", "crossed-module", algebras.sl2_ideal_in_gl2,
                 "sl(2) included in gl(2) as an ideal, adjoint action"),
    CatalogEntry("identity-sl2", "crossed-module", lambda: algebras.identity_crossed_module(algebras.SL2, 3),
                 "sl(2) -> sl(2), phi = id, adjoint action"),
    CatalogEntry("gl2-sl2-r-matrix", "r-matrix", _gl2_r,
                 "r = E12 ^ E21 on gl(2) -> sl(2)"),
    CatalogEntry("sl2-ideal-r-matrix", "r-matrix", _ideal_r,
                 "r = e ^ f on sl(2) in gl(2)"),
]

CATALOG = {e.name: e for e in _ENTRIES}


def catalog_names():
    return [e.name for e in _ENTRIES]


def get_entry(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}") from None


def export(name):
    return get_entry(name).file()
