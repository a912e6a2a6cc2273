from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from lie2bialg.algebras import (SL2, abelian_crossed_module, gl2_sl2_projection,
                                identity_crossed_module, sl2, sl2_ideal_in_gl2)
from lie2bialg.bigbracket import big_bracket
from lie2bialg.calculus import check_quasi_triple, cocycle_check, lift_to_semidirect
from lie2bialg.classical import encode
from lie2bialg.coboundary import (RMatrix, coboundary_triple, dual_crossed_module,
                                  general_cocycle_triple, is_r_matrix, lambda_r)
from lie2bialg.multilinear import LinearMap, Multivector, Space, basis, d_phi, wedge, zero
from lie2bialg.structures import (CrossedModule, is_lie_bialgebra_crossed_module,
                                  strict_from_bicrossed, swap_duality)

from oracles import rng, schouten_oracle

MODULES = {
    "gl2-sl2": gl2_sl2_projection,
    "sl2-ideal": sl2_ideal_in_gl2,
    "identity-sl2": lambda: identity_crossed_module(SL2, 3),
}


def random_r(cm, r):
    sp = cm.space
    return Multivector(sp, {m: r.randint(-2, 2) for m in combinations(sp.theta_indices(), 2)})


def r_matrix_oracle_gl2(r):
    """r = a + I ^ b on gl(2) = sl(2) + R I; r is an r-matrix iff [a] and b are parallel.

    The I-part of [r, r] is a multiple of I ^ [a, b]; it must be sl(2)-invariant,
    hence zero, and [a, b] = 0 iff the image of a under x ^ y -> [x, y] is parallel to b.
    """
    sp = r.space
    local = Space(4, 0)  # H, E, F, I
    half = Fraction(1, 2)
    images = [Multivector(local, {(0,): half, (3,): half}), Multivector(local, {(1,): 1}),
              Multivector(local, {(2,): 1}), Multivector(local, {(0,): -half, (3,): half})]
    moved = zero(local)
    for (p, q), c in r.terms.items():
        moved = moved + wedge(images[p - sp.g_dim], images[q - sp.g_dim]) * c
    s = sl2()
    three = Space(3, 0)
    a_image, b = zero(three), zero(three)
    for (p, q), c in moved.terms.items():
        if q == 3:
            b = b - basis(three, p) * c  # e_p ^ I = -I ^ e_p
        else:
            for k, v in s.bracket_basis(p, q).items():
                a_image = a_image + basis(three, k) * (c * v)
    return not wedge(a_image, b)


# -- r-matrices ---------------------------------------------------------------------

def test_abelian_theta_every_r_passes():
    cm = abelian_crossed_module(2, 3)
    r = rng(0)
    for _ in range(10):
        assert is_r_matrix(random_r(cm, r), cm).passed


def test_ideal_e_wedge_f_against_schouten_oracle():
    cm = sl2_ideal_in_gl2()
    sp = cm.space
    r = Multivector(sp, {(sp.theta(1), sp.theta(2)): 1})
    lie = lift_to_semidirect(cm)
    rr = schouten_oracle(r, r, lie)
    expected = all(not schouten_oracle(lie.vector(i), rr, lie) for i in sp.g_indices())
    assert is_r_matrix(r, cm).passed == expected


def test_gl2_basis_bivectors_are_r_matrices():
    cm = gl2_sl2_projection()
    sp = cm.space
    for m in combinations(sp.theta_indices(), 2):
        assert is_r_matrix(Multivector(sp, {m: 1}), cm).passed


def test_gl2_r_matrix_criterion():
    cm = gl2_sl2_projection()
    r = rng(1)
    verdicts = set()
    for _ in range(60):
        rv = random_r(cm, r)
        v = is_r_matrix(rv, cm).passed
        assert v == r_matrix_oracle_gl2(rv)
        verdicts.add(v)
    assert verdicts == {True, False}


def test_r_matrix_witness_is_reevaluable():
    cm = gl2_sl2_projection()
    sp = cm.space
    rv = Multivector(sp, {(sp.theta(0), sp.theta(1)): 1, (sp.theta(1), sp.theta(2)): 1})
    rep = is_r_matrix(rv, cm)
    assert not rep.passed
    for v in rep.violations:
        assert v.identity == "[r,r] g-invariant"
        assert rep.reevaluate(v) == v.residual


def test_r_must_lie_in_wedge2_theta():
    cm = gl2_sl2_projection()
    with pytest.raises(ValueError):
        RMatrix(cm, basis(cm.space, 0, cm.space.theta(0)))


# -- the coboundary triple ------------------------------------------------------------

def test_zero_r_gives_zero_triple():
    cm = gl2_sl2_projection()
    t = coboundary_triple(zero(cm.space), cm)
    assert not t.omega and not t.delta and not t.eta


def test_delta_two_forms_identity_sl2():
    cm = identity_crossed_module(SL2, 3)
    sp = cm.space
    r = Multivector(sp, {(sp.theta(1), sp.theta(2)): 1})
    lie = lift_to_semidirect(cm)
    t = coboundary_triple(r, cm)
    for i in sp.g_indices():
        x = lie.vector(i)
        first = d_phi(cm, schouten_oracle(x, r, lie)) * -1
        second = schouten_oracle(x, d_phi(cm, r), lie) * -1
        assert first == second == t.delta(i)
    assert not t.delta(0) and t.delta(1)  # e ^ f has weight zero


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(sorted(MODULES)), st.integers(0, 2 ** 32))
def test_every_r_gives_a_quasi_triple(name, seed):
    cm = MODULES[name]()
    rv = random_r(cm, rng(seed))
    t = coboundary_triple(rv, cm)
    rep = check_quasi_triple(t)
    assert rep.passed
    assert (not t.eta) == is_r_matrix(rv, cm).passed
    assert rep.classification == ("strict" if not t.eta else "quasi")


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sorted(MODULES)), st.integers(0, 2 ** 32))
def test_delta_two_forms_everywhere(name, seed):
    cm = MODULES[name]()
    rv = random_r(cm, rng(seed))
    lie = lift_to_semidirect(cm)
    for i in cm.space.g_indices():
        x = lie.vector(i)
        assert d_phi(cm, lie.bracket(x, rv)) == lie.bracket(x, d_phi(cm, rv))


# -- cocycles ----------------------------------------------------------------------------

def test_zero_cocycle():
    cm = gl2_sl2_projection()
    assert cocycle_check(LinearMap(cm.space, 2), cm).passed


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sorted(MODULES)), st.integers(0, 2 ** 32))
def test_lambda_r_is_a_cocycle(name, seed):
    cm = MODULES[name]()
    assert cocycle_check(lambda_r(random_r(cm, rng(seed)), cm), cm).passed


def test_non_equivariant_map_fails():
    """Brute force over unit maps g -> wedge^2 theta on the identity sl(2) module."""
    cm = identity_crossed_module(SL2, 3)
    sp = cm.space
    failing = []
    for i in sp.g_indices():
        for m in combinations(sp.theta_indices(), 2):
            lam = LinearMap(sp, 2, {i: Multivector(sp, {m: 1})})
            rep = cocycle_check(lam, cm)
            if not rep.passed:
                failing.append(rep)
    assert failing
    assert all(rep.failing_identities() == ["cocycle"] for rep in failing)


def test_general_cocycle_triple_of_lambda_r_is_the_r_triple():
    for name, build in MODULES.items():
        cm = build()
        r = rng(3)
        for _ in range(4):
            rv = random_r(cm, r)
            a, b = coboundary_triple(rv, cm), general_cocycle_triple(lambda_r(rv, cm), cm)
            assert (a.omega, a.delta, a.eta) == (b.omega, b.delta, b.eta), name


def test_general_cocycle_triple_degenerate_cases():
    cm = gl2_sl2_projection()
    t = general_cocycle_triple(LinearMap(cm.space, 2), cm)
    assert not t.omega and not t.delta and not t.eta
    sp = Space(3, 3)
    ident = identity_crossed_module(SL2, 3)
    flat = CrossedModule(sp, ident.g_bracket, ident.theta_bracket, None, ident.action)
    rv = Multivector(sp, {(3, 4): 1, (4, 5): 2})
    t = general_cocycle_triple(lambda_r(rv, flat), flat)
    assert not t.omega and not t.eta
    assert check_quasi_triple(t).passed


def test_general_cocycle_triple_rejects_non_cocycles():
    cm = identity_crossed_module(SL2, 3)
    sp = cm.space
    with pytest.raises(ValueError):
        general_cocycle_triple(LinearMap(sp, 2, {0: basis(sp, 3, 4)}), cm)


# -- the induced Lie bialgebra crossed module -----------------------------------------------

def test_zero_r_dual_is_abelian():
    cm = gl2_sl2_projection()
    bcm = dual_crossed_module(zero(cm.space), cm)
    assert not bcm.dual.g_bracket and not bcm.dual.action
    assert is_lie_bialgebra_crossed_module(bcm).passed


def test_dual_requires_r_matrix():
    cm = gl2_sl2_projection()
    sp = cm.space
    rv = Multivector(sp, {(sp.theta(0), sp.theta(1)): 1, (sp.theta(1), sp.theta(2)): 1})
    with pytest.raises(ValueError):
        dual_crossed_module(rv, cm)


def test_random_r_matrices_give_bialgebra_crossed_modules():
    cm = gl2_sl2_projection()
    r = rng(5)
    done = 0
    while done < 8:
        rv = random_r(cm, r)
        if not is_r_matrix(rv, cm).passed:
            continue
        bcm = dual_crossed_module(rv, cm)
        assert is_lie_bialgebra_crossed_module(bcm).passed
        assert is_lie_bialgebra_crossed_module(swap_duality(bcm)).passed
        t = encode(strict_from_bicrossed(bcm))
        assert not big_bracket(t, t)
        # the dual side carries exactly the coboundary triple
        triple = coboundary_triple(rv, cm)
        maps = strict_from_bicrossed(bcm)
        assert (maps.omega, maps.delta) == (triple.omega, triple.delta)
        done += 1
