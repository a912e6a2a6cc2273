"""Infinitesimal multiplicative k-vector fields: pairs (omega, delta) and their bracket."""

import random

from lie2bialg.algebras import identity_crossed_module, SL2
from lie2bialg.calculus import (a_k_bracket, build_partial, check_ID, coboundary_pair,
                                differential_commutator, is_k_differential, lift_to_semidirect)
from lie2bialg.coboundary import lambda_r
from lie2bialg.multilinear import Multivector

cm = identity_crossed_module(SL2, 3)
sp = cm.space
lie = lift_to_semidirect(cm)

# Each r in wedge^2 theta gives an equivariant cocycle lambda_r, hence a pair in A_2.
def pair_from(coeffs):
    r = Multivector(sp, {(sp.theta(a), sp.theta(b)): c for (a, b), c in coeffs.items()})
    return coboundary_pair(lambda_r(r, cm), cm)

rng = random.Random(3)
p = pair_from({(0, 1): rng.randint(-2, 2), (1, 2): rng.randint(-2, 2)})
q = pair_from({(0, 2): 1})
print(check_ID(p).to_text())

pq = a_k_bracket(p, q)
print("\n[p, q] lies in A_3:", check_ID(pq).passed)

# The pair determines a 2-differential of the semidirect product.
d_p, d_q = build_partial(p), build_partial(q)
print("partial(p) is a 2-differential:", is_k_differential(d_p, lie, 2).passed)
print("[partial p, partial q] == partial [p, q]:",
      differential_commutator(d_p, d_q, 2, 2, lie) == build_partial(pq))
