"""Coboundary structures on gl(2) -> sl(2) from bivectors r in wedge^2 gl(2)."""

import random
from itertools import combinations

from lie2bialg.algebras import gl2_sl2_projection
from lie2bialg.bigbracket import big_bracket
from lie2bialg.calculus import check_quasi_triple
from lie2bialg.classical import encode
from lie2bialg.coboundary import coboundary_triple, dual_crossed_module, is_r_matrix
from lie2bialg.multilinear import Multivector
from lie2bialg.structures import is_lie_bialgebra_crossed_module, strict_from_bicrossed

cm = gl2_sl2_projection()
sp = cm.space
E11, E12, E21, E22 = (sp.theta(j) for j in range(4))

# r = E12 ^ E21: [r, r] is g-invariant, so eta vanishes and the structure is strict.
r = Multivector(sp, {(E12, E21): 1})
print("r-matrix?", is_r_matrix(r, cm).passed)
t = coboundary_triple(r, cm)
print("omega:", t.omega)
print("delta:", t.delta)
print("classification:", check_quasi_triple(t).classification)

bcm = dual_crossed_module(r, cm)
print("dual crossed module passes:", is_lie_bialgebra_crossed_module(bcm).passed)
element = encode(strict_from_bicrossed(bcm), "bialgebra")
print("{t, t} == 0:", not big_bracket(element, element))

# A generic r is not an r-matrix, yet its triple is still a quasi-Lie 2-bialgebra.
rng = random.Random(0)
hits = 0
for _ in range(50):
    rv = Multivector(sp, {m: rng.randint(-2, 2) for m in combinations(sp.theta_indices(), 2)})
    t = coboundary_triple(rv, cm)
    assert check_quasi_triple(t).passed
    hits += is_r_matrix(rv, cm).passed
print(f"\n{hits} of 50 random r are r-matrices; all 50 triples are quasi-Lie 2-bialgebras")
