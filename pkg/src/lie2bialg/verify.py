"""One entry point that verifies any file-level object against a named structure kind."""

from itertools import combinations

from .bigbracket import big_bracket
from .calculus import (InfinitesimalPair, QuasiTriple, check_ID, check_quasi_triple,
                       cocycle_check, is_k_differential)
from .classical import StructureMaps, encode
from .coboundary import RMatrix, is_r_matrix
from .fileio import Cocycle, KDifferential, LieBialgebra
from .multilinear import LieAlgebra, basis
from .report import Report
from .structures import (ROUTES, CrossedModule, LieBialgebraCrossedModule,
                         bicrossed_from_strict, is_crossed_module, is_lie_bialgebra,
                         is_lie_bialgebra_crossed_module, strict_from_bicrossed,
                         verify_weak_lie2_algebra, verify_weak_lie2_bialgebra,
                         verify_weak_lie2_coalgebra)

__all__ = ["verify", "KINDS", "ACCEPTED_TYPES"]

ACCEPTED_TYPES = {
    "lie-algebra": LieAlgebra,
    "lie-bialgebra": LieBialgebra,
    "lie2alg": StructureMaps,
    "lie2coalg": StructureMaps,
    "lie2bialg": StructureMaps,
    "crossed-module": CrossedModule,
    "bicrossed-module": LieBialgebraCrossedModule,
    "quasi-triple": QuasiTriple,
    "infinitesimal-pair": InfinitesimalPair,
    "r-matrix": RMatrix,
    "cocycle": Cocycle,
    "k-differential": KDifferential,
}
KINDS = tuple(ACCEPTED_TYPES)


def _combine_routes(report, unfolded, bracket, route):
    """Merge the per-route reports and flag a disagreement when both ran."""
    if unfolded is not None:
        report.absorb(unfolded)
    if bracket is not None:
        report.absorb(bracket)
    if route == "both" and unfolded.passed != bracket.passed:
        report.fail("route-agreement", (), f"unfolded={unfolded.passed} bracket={bracket.passed}")
    return report


def _crossed_module_bracket_route(cm):
    """{s, s} = 0 for the strict datum, plus theta-bracket = phi(u) |> v."""
    report = Report("crossed module (bracket route)")
    s = encode(cm.maps, "algebra")
    report.check_value("{s,s}=0", lambda: big_bracket(s, s))
    sp = cm.space
    e = lambda i: basis(sp, i)
    report.check("theta-bracket-from-phi",
                 lambda j, k: cm.theta_br(e(j), e(k)) - cm.act(cm.ph(e(j)), e(k)),
                 list(combinations(sp.theta_indices(), 2)))
    return report.finish()


def _bicrossed_bracket_route(bcm):
    """{t, t} = 0 for the strict datum, and the datum determines the pair back."""
    report = Report("Lie bialgebra crossed module (bracket route)")
    maps = strict_from_bicrossed(bcm)
    t = encode(maps, "bialgebra")
    report.check_value("{t,t}=0", lambda: big_bracket(t, t))
    report.check_value("bicrossed-round-trip",
                       lambda: bicrossed_from_strict(maps) != bcm)
    return report.finish()


def verify(obj, structure, route="both"):
    """Report for ``obj`` read as ``structure``; ``route`` picks unfolded / bracket / both."""
    if structure not in ACCEPTED_TYPES:
        raise ValueError(f"unknown structure kind {structure!r}")
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}")
    if not isinstance(obj, ACCEPTED_TYPES[structure]):
        raise TypeError(f"a {type(obj).__name__} cannot be verified as {structure}")
    if structure == "lie2alg":
        return verify_weak_lie2_algebra(obj, route)
    if structure == "lie2coalg":
        return verify_weak_lie2_coalgebra(obj, route)
    if structure == "lie2bialg":
        return verify_weak_lie2_bialgebra(obj, route)
    if structure == "crossed-module":
        report = Report("crossed module")
        unfolded = is_crossed_module(obj) if route != "bracket" else None
        bracket = _crossed_module_bracket_route(obj) if route != "unfolded" else None
        return _combine_routes(report, unfolded, bracket, route).finish()
    if structure == "bicrossed-module":
        report = Report("Lie bialgebra crossed module")
        unfolded = is_lie_bialgebra_crossed_module(obj) if route != "bracket" else None
        bracket = _bicrossed_bracket_route(obj) if route != "unfolded" else None
        return _combine_routes(report, unfolded, bracket, route).finish()
    if structure == "quasi-triple":
        if route == "bracket":
            report = Report("quasi-Lie 2-bialgebra triple")
            element = encode(obj.maps(), "bialgebra")
            report.check_value("{o+c,o+c}=0", lambda: big_bracket(element, element))
            report.classification = obj.classification()
            return _with_base(report.finish(), obj.cm)
        return _with_base(check_quasi_triple(obj, cross_check=(route == "both")), obj.cm)
    if structure == "lie-algebra":
        return _jacobi_report(obj)
    if structure == "lie-bialgebra":
        return is_lie_bialgebra(obj.lie, obj.lie_star)
    if structure == "infinitesimal-pair":
        return _with_base(check_ID(obj), obj.cm)
    if structure == "r-matrix":
        return _with_base(is_r_matrix(obj), obj.cm)
    if structure == "cocycle":
        return _with_base(cocycle_check(obj.lam, obj.cm), obj.cm)
    lie = obj.lie()
    report = Report(f"{obj.k}-differential")
    report.absorb(_jacobi_report(lie), "semidirect: ")
    report.absorb(is_k_differential(obj.d, lie, obj.k))
    return report.finish()


def _jacobi_report(lie):
    report = Report("Lie algebra")
    report.check("jacobi", lie.jacobiator, list(combinations(range(lie.dim), 3)))
    return report.finish()


def _with_base(report, cm):
    """Prepend the crossed-module check of the context ``cm`` to ``report``."""
    out = Report(report.target)
    out.classification = report.classification
    out.absorb(is_crossed_module(cm), "crossed module: ")
    out.absorb(report)
    out.finish()
    out.elapsed += report.elapsed
    return out
