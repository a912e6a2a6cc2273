from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from lie2bialg.algebras import (SL2, identity_crossed_module, random_structure_maps,
                                string_lie2_algebra)
from lie2bialg.bigbracket import G, GS, T, TS, big_bracket, gen
from lie2bialg.classical import (COMPONENTS, ENCODING_CONSTANTS, SHAPES, StructureMaps,
                                 calibrate, decode, encode, split_components)
from lie2bialg.multilinear import LinearMap, Multivector, Space, pair

from oracles import rng


def chain(el, gens):
    for g in gens:
        el = big_bracket(el, g)
    return el


def scalar_of(el):
    return el.terms.get((), Fraction(0))


def test_calibration_reproduces_frozen_constants():
    assert calibrate() == ENCODING_CONSTANTS


def test_zero_maps_encode_to_zero():
    assert not encode(StructureMaps(Space(2, 2)))


def test_string_algebra_has_only_bracket_and_h_components():
    s = encode(string_lie2_algebra(1), "algebra")
    parts = split_components(s)
    assert {name for name, el in parts.items() if el} == {"bracket", "h"}


def test_identity_crossed_module_encoding():
    cm = identity_crossed_module(SL2, 3)
    parts = split_components(encode(cm.maps, "algebra"))
    assert {name for name, el in parts.items() if el} == {"phi", "bracket", "action"}


def test_component_filters():
    maps = random_structure_maps(2, 3, rng(3), COMPONENTS, density=1.0)
    for kind, names in (("algebra", {"phi", "bracket", "action", "h"}),
                        ("coalgebra", {"phi", "omega", "delta", "eta"})):
        parts = split_components(encode(maps, kind))
        assert {n for n, el in parts.items() if el} <= names


def test_foreign_monomials_rejected():
    with pytest.raises(ValueError):
        split_components(gen(G, 0) * 1)
    with pytest.raises(ValueError):
        decode(big_bracket(gen(G, 0), gen(GS, 0)) + gen(G, 0), Space(1, 1))


def test_wrong_shape_maps_rejected():
    sp = Space(2, 1)
    with pytest.raises(ValueError):
        StructureMaps(sp, phi=LinearMap(sp, 1, {0: Multivector(sp, {(1,): 1})}))
    with pytest.raises(ValueError):
        StructureMaps(sp, bracket={(0, 1): Multivector(sp, {(2,): 1})})


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 2 ** 32))
def test_round_trip(n, m, seed):
    maps = random_structure_maps(n, m, rng(seed), COMPONENTS)
    assert decode(encode(maps), maps.space) == maps


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 2 ** 32))
def test_extraction_identities(n, m, seed):
    """Each classical value is read back off the element by the stated brackets."""
    maps = random_structure_maps(n, m, rng(seed), COMPONENTS)
    sp = maps.space
    t = encode(maps)
    x, u, xi, ka = (lambda i: gen(G, i)), (lambda j: gen(T, j)), (lambda i: gen(GS, i)), (lambda j: gen(TS, j))
    for j in range(m):
        phi_u = chain(t.project(SHAPES["phi"]), [u(j)])
        assert {mono[0][1]: c for mono, c in phi_u.terms.items()} == \
            {i: c for (i,), c in maps.phi(sp.theta(j)).terms.items()}
        for k, l in combinations(range(m), 2):
            got = scalar_of(chain(t.project(SHAPES["omega"]), [u(j), ka(k), ka(l)]))
            assert got == pair([{sp.theta(k): 1}, {sp.theta(l): 1}], maps.omega(sp.theta(j)))
    for i in range(n):
        for k in range(n):
            for l in range(m):
                got = -scalar_of(chain(t.project(SHAPES["delta"]), [x(i), xi(k), ka(l)]))
                assert got == pair([{k: 1}, {sp.theta(l): 1}], maps.delta(i))
        for a, b, c in combinations(range(m), 3):
            got = -scalar_of(chain(t.project(SHAPES["eta"]), [x(i), ka(a), ka(b), ka(c)]))
            cov = [{sp.theta(a): 1}, {sp.theta(b): 1}, {sp.theta(c): 1}]
            assert got == pair(cov, maps.eta(i))


def test_decode_rejects_out_of_range_generators():
    el = encode(identity_crossed_module(SL2, 3).maps, "algebra")
    with pytest.raises(ValueError):
        decode(el, Space(2, 2))


def test_tt_zero_implies_both_halves_vanish():
    from lie2bialg.catalog import CATALOG
    from lie2bialg.fileio import from_file
    from lie2bialg.structures import strict_from_bicrossed
    for entry in CATALOG.values():
        if entry.structure not in ("lie2bialg", "bicrossed-module"):
            continue
        obj = from_file(entry.file())
        maps = obj if isinstance(obj, StructureMaps) else strict_from_bicrossed(obj)
        t = encode(maps)
        assert not big_bracket(t, t)
        for kind in ("algebra", "coalgebra"):
            half = encode(maps, kind)
            assert not big_bracket(half, half), (entry.name, kind)
