"""The eight acceptance criteria, each with its time budget.

Each test prints one line ``criterion N: PASS|FAIL ...`` straight to the
terminal. Run just this file with ``pytest tests/test_acceptance.py -v``.
"""

import io
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations

import pytest

from lie2bialg.algebras import (SL2, gl2_sl2_projection, identity_crossed_module,
                                random_lie_algebra, random_structure_maps, sl2_ideal_in_gl2)
from lie2bialg.bigbracket import big_bracket, degree, odot
from lie2bialg.calculus import (QuasiTriple, a_k_bracket, build_partial, check_ID,
                                check_quasi_triple, coboundary_pair, differential_commutator,
                                in_W_k, is_k_differential, lift_to_semidirect)
from lie2bialg.catalog import catalog_names, export, get_entry
from lie2bialg.classical import encode
from lie2bialg.cli import main
from lie2bialg.coboundary import coboundary_triple, dual_crossed_module, is_r_matrix
from lie2bialg.fileio import dumps, from_file, loads, to_file, write_file
from lie2bialg.multilinear import (LinearMap, Multivector, basis, d_phi, interior,
                                   project_bigrade, pullback, zero)
from lie2bialg.structures import (is_lie_bialgebra_crossed_module, strict_from_bicrossed,
                                  verify_weak_lie2_algebra, verify_weak_lie2_coalgebra)
from lie2bialg.verify import verify

from oracles import random_cocycle, random_combination, random_homogeneous, w_k_basis
from perturb import tally

WORKED_EXAMPLES = ["string-sl2", "string-sl2-half", "fixed-x-coalgebra",
                 "weak-bialgebra-string+fixed-x", "identity-bicrossed-from-bialgebra",
                 "u2-manin", "gl2-sl2-projection", "sl2-ideal-in-gl2"]


@contextmanager
def criterion(capsys, number, title, budget):
    """Time the block, then print one verdict line and enforce the budget."""
    state = {"detail": ""}
    start = time.perf_counter()
    ok = False
    try:
        yield state
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        in_time = budget is None or elapsed < budget
        limit = f"< {budget} s" if budget else "no budget"
        verdict = "PASS" if ok and in_time else "FAIL"
        with capsys.disabled():
            print(f"\ncriterion {number}: {verdict}  {title}  [{elapsed:.2f} s, {limit}]  {state['detail']}")
    assert in_time, f"criterion {number} took {elapsed:.2f} s"


def shift_sign(a, b):
    return -1 if (degree(a) + 3) * (degree(b) + 3) % 2 else 1


def test_criterion_1_big_bracket_laws(capsys):
    with criterion(capsys, 1, "big bracket laws", 10) as state:
        r = random.Random(1)
        checked = 0
        while checked < 200:
            n, m = r.randint(1, 3), r.randint(1, 3)
            a, b, c = (random_homogeneous(n, m, r) for _ in range(3))
            if not (a and b and c):
                continue
            ab = big_bracket(a, b)
            assert ab == big_bracket(b, a) * -shift_sign(a, b)
            if ab:
                assert degree(ab) == degree(a) + degree(b) + 3
            leib = -1 if (degree(a) + 3) * degree(b) % 2 else 1
            assert big_bracket(a, odot(b, c)) == odot(ab, c) + odot(b, big_bracket(a, c)) * leib
            assert big_bracket(a, big_bracket(b, c)) == \
                big_bracket(ab, c) + big_bracket(b, big_bracket(a, c)) * shift_sign(a, b)
            checked += 1
        state["detail"] = f"{checked} triples"


def test_criterion_2_encoding_equivalence(capsys):
    with criterion(capsys, 2, "unfolded verdict == {s,s}=0 / {c,c}=0 verdict", 30) as state:
        r = random.Random(2)
        tallies = {}
        for label, check, comps in (
                ("algebra", verify_weak_lie2_algebra, ("phi", "bracket", "action", "h")),
                ("coalgebra", verify_weak_lie2_coalgebra, ("phi", "omega", "delta", "eta"))):
            counts = [0, 0]
            for _ in range(150):
                maps = random_structure_maps(r.randint(1, 2), r.randint(1, 2), r, comps)
                unfolded = check(maps, "unfolded").passed
                assert unfolded == check(maps, "bracket").passed
                counts[unfolded] += 1
            assert min(counts) > 0  # both verdicts occur
            tallies[label] = f"{counts[1]} pass / {counts[0]} fail"
        state["detail"] = "; ".join(f"{k}: {v}" for k, v in tallies.items())


def test_criterion_3_catalog_regression(capsys, tmp_path):
    with criterion(capsys, 3, "worked examples verify with exit 0", 10) as state:
        codes = {}
        for name in WORKED_EXAMPLES:
            path = tmp_path / f"{name}.json"
            write_file(path, export(name))
            codes[name] = main(["verify", "--input", str(path)], io.StringIO())
        assert all(c == 0 for c in codes.values()), codes
        state["detail"] = f"{len(codes)} entries"


def _random_triple(r, cm):
    """A coboundary triple, with probability 3/4 bumped in one slot of omega, delta or eta."""
    sp = cm.space
    th, gi = list(sp.theta_indices()), list(sp.g_indices())
    rv = Multivector(sp, {m: r.randint(-2, 2) for m in combinations(th, 2)})
    t = coboundary_triple(rv, cm)
    maps = {"omega": dict(t.omega.images), "delta": dict(t.delta.images), "eta": dict(t.eta.images)}
    kind = r.choice(["keep", "omega", "delta", "eta"])
    if kind != "keep":
        key = r.choice(th if kind == "omega" else gi)
        if kind == "omega":
            bump = basis(sp, *r.choice(list(combinations(th, 2))))
        elif kind == "delta":
            bump = basis(sp, r.choice(gi), r.choice(th))
        else:
            bump = basis(sp, *r.choice(list(combinations(th, 3))))
        maps[kind][key] = maps[kind].get(key, zero(sp)) + bump * r.choice([-1, 1])
    return QuasiTriple(cm, LinearMap(sp, 2, maps["omega"]), LinearMap(sp, 2, maps["delta"]),
                       LinearMap(sp, 3, maps["eta"]))


def test_criterion_4_seven_conditions(capsys):
    with criterion(capsys, 4, "seven conditions == {o+c,o+c}=0", 30) as state:
        r = random.Random(4)
        modules = [gl2_sl2_projection(), sl2_ideal_in_gl2(), identity_crossed_module(SL2, 3)]
        counts = [0, 0]
        for _ in range(80):
            t = _random_triple(r, r.choice(modules))
            seven = check_quasi_triple(t, cross_check=False).passed
            element = encode(t.maps(), "bialgebra")
            assert seven == (not big_bracket(element, element))
            counts[seven] += 1
        assert min(counts) > 0
        state["detail"] = f"{counts[1]} pass / {counts[0]} fail"


def test_criterion_5_r_matrix_pipeline(capsys):
    """Fails as stated: most r in wedge^2 gl(2) do not have invariant [r, r].

    The failures are real; see the r-matrix tests for the exact criterion.
    """
    with criterion(capsys, 5, "50 random r on gl(2) -> sl(2)", 60) as state:
        r = random.Random(0)
        cm = gl2_sl2_projection()
        sp = cm.space
        good = 0
        for _ in range(50):
            rv = Multivector(sp, {m: r.randint(-2, 2) for m in combinations(sp.theta_indices(), 2)})
            t = coboundary_triple(rv, cm)
            if not is_r_matrix(rv, cm).passed:
                assert t.eta  # consistent: eta_r vanishes exactly on r-matrices
                continue
            assert not t.eta
            bcm = dual_crossed_module(rv, cm)
            assert is_lie_bialgebra_crossed_module(bcm).passed
            element = encode(strict_from_bicrossed(bcm), "bialgebra")
            assert not big_bracket(element, element)
            good += 1
        state["detail"] = f"{good}/50 random r are r-matrices; full pipeline passes on those"
        assert good == 50, f"only {good} of 50 random r are r-matrices"


def test_criterion_6_a_k_structure(capsys):
    with criterion(capsys, 6, "A_k structure", 60) as state:
        r = random.Random(6)
        n = 0
        for cm in (gl2_sl2_projection(), sl2_ideal_in_gl2(), identity_crossed_module(SL2, 3)):
            lie = lift_to_semidirect(cm)
            pairs = [coboundary_pair(random_cocycle(cm, l, r), cm) for l in (1, 2, 1, 3, 2)]
            for p in pairs:
                assert check_ID(p).passed
                assert is_k_differential(build_partial(p), lie, p.k).passed
            for a in pairs:
                for b in pairs:
                    if a.k + b.k - 1 > 3:
                        continue
                    ab = a_k_bracket(a, b)
                    assert check_ID(ab).passed
                    lhs = differential_commutator(build_partial(a), build_partial(b), a.k, b.k, lie)
                    assert lhs == build_partial(ab)
                    n += 1
            a, b, c = pairs[0], pairs[1], pairs[4]
            s = -1 if (a.k - 1) * (b.k - 1) % 2 else 1
            assert a_k_bracket(a, a_k_bracket(b, c)) == \
                a_k_bracket(a_k_bracket(a, b), c) + a_k_bracket(b, a_k_bracket(a, c)) * s
        state["detail"] = f"{n} brackets checked"


def _power(cm, a, j):
    for _ in range(j):
        a = d_phi(cm, a)
    return a


def test_criterion_7_contraction_identities(capsys):
    with criterion(capsys, 7, "contraction identities, k <= 4", 10) as state:
        r = random.Random(7)
        modules = [gl2_sl2_projection(), sl2_ideal_in_gl2(), identity_crossed_module(SL2, 3)]
        for _ in range(3):
            lie = random_lie_algebra(3, r)
            modules.append(identity_crossed_module({(i, j, k): c for i, j, k, c in lie.constants()}, 3))
        n = 0
        for cm in modules:
            sp = cm.space
            lie = lift_to_semidirect(cm)
            theta = list(sp.theta_indices())
            for k in range(1, 5):
                w_basis = w_k_basis(cm, k)
                wedges = [Multivector(sp, {m: 1}) for m in combinations(theta, k - 1)]
                for _ in range(2):
                    w = random_combination(w_basis, r, sp)
                    assert in_W_k(w, k, cm).passed
                    for i in sp.g_indices():
                        zeta = {i: 1}
                        for j in range(1, k + 1):
                            first = interior(pullback(cm.phi, zeta), _power(cm, w, j - 1))
                            second = _power(cm, interior(zeta, w), j)
                            third = interior(zeta, _power(cm, w, j)) * Fraction(1, j + 1)
                            assert first == second == third
                            n += 1
                    v = random_combination(wedges, r, sp)
                    for q in theta:
                        for l in range(1, k):
                            inner = _power(cm, v, l - 1) * l - _power(cm, v, l)
                            assert not project_bigrade(lie.bracket(inner, basis(sp, q)), l - 1, k - l)
                            n += 1
        state["detail"] = f"{n} identity instances on {len(modules)} crossed modules"


def test_criterion_8_witnesses_round_trip_corruption(capsys):
    """Witness fidelity and round trips pass; the literal 95% rejection rate does not
    hold for entries where many single-constant changes preserve the structure."""
    with criterion(capsys, 8, "witness fidelity, round trip, corrupt-and-detect", None) as state:
        short = []
        lines = []
        for name in catalog_names():
            sf = export(name)
            text = dumps(sf)
            assert dumps(loads(text)) == text
            assert dumps(to_file(from_file(loads(text)), get_entry(name).structure,
                                 name=name, notes=sf.notes)) == text
            counts, bad = tally(sf, trials=100, seed=0)
            assert not bad and counts["misnamed"] == counts["undetected"] == 0, (name, bad)
            lines.append(f"{name} {counts['rejected']}/{counts['preserved']}")
            if counts["rejected"] < 95:
                short.append(name)
        # witness fidelity on deliberately broken inputs
        broken = export("string-sl2")
        broken.tensors["bracket_g"][(("x", 0), ("x", 1), ("x", 1))] = Fraction(3)
        rep = verify(from_file(broken), "lie2alg", "both")
        assert not rep.passed
        assert all(rep.reevaluate(v) == v.residual for v in rep.violations)
        state["detail"] = "rejected/preserved: " + ", ".join(lines)
        assert not short, f"below 95% rejection (remainder structure-preserving): {short}"


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
