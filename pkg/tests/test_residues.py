import json
from fractions import Fraction

import pytest

from bexponents.errors import BadAB, BadExtraTerm, KInSemigroup, OrderTwoPole
from bexponents.invariants import CharSeq, split_sets, b1_shift, b2_shift
from bexponents.polyring import MPoly, ParamCoef
from bexponents.residues.claims import (
    claim1_family, claim2_family, minimal_ab, solve_vanishing_params, claim1_enumerate,
)
from bexponents.residues.engine import (
    pole_candidates_minus, pole_candidates_plus, residue, residue_minus, residue_plus,
    residue_sides,
)
from bexponents.residues.families import (
    build_minus_family, build_plus_family, family_from_json, family_to_json, positivity_check,
    solve_ab,
)
from bexponents.residues.oracle import numeric_sides

CS = CharSeq(4, 5, 2, 7)
T = ParamCoef.param(0)


@pytest.fixture(scope="module")
def minus_family():
    return build_minus_family(CS, [(0, 6, 6, "t")], (7, 3), ("t",))


@pytest.fixture(scope="module")
def plus_family():
    return build_plus_family(CS, [], (7, 3), [(6, 6, "t")], ("t",))


def test_family_polynomials(minus_family, plus_family):
    g = MPoly({(4, 0): 1, (0, 5): -1})
    assert minus_family.f == g ** 2 + MPoly.monomial(7, 3) + MPoly.monomial(6, 6, T)
    g = MPoly({(4, 0): 1, (0, 5): 1})
    assert plus_family.f == g ** 2 + MPoly.monomial(7, 3) + MPoly.monomial(6, 6, T)


def test_family_errors():
    with pytest.raises(BadAB):
        build_minus_family(CS, [], (1, 1))
    with pytest.raises(BadExtraTerm):
        build_minus_family(CS, [(5, 0, 0, 1)], (7, 3))
    assert solve_ab(CS) == (3, 8)
    assert 5 * 3 + 4 * 8 == CS.D


def test_pole_candidates():
    poles = pole_candidates_minus(CS, 1, 1, 0)
    assert poles.abscissa() == Fraction(-9, 40)
    assert poles.second_family(Fraction(-39, 94)) == [(1, 14), (2, 7), (3, 0)]
    assert pole_candidates_plus(CS, 1, 1).P.first() == Fraction(-9, 40)


def test_headline_residue(minus_family):
    r = residue_minus(minus_family, 1, 1, 0, Fraction(-39, 94))
    assert r.render() == "(136*t - 63)/447440 * B(-4/47, 1/2)"
    assert residue(minus_family, [1, 1, 0], Fraction(-39, 94)) == r


def test_vanishing_residues(minus_family):
    for k in (2, 4, 6, 12):
        assert residue_minus(minus_family, 1, 1, 0, -Fraction(25 + k, 94)).is_zero()
    for b in ((2, 1, 0), (1, 2, 0)):
        assert residue_minus(minus_family, *b, Fraction(-39, 94)).is_zero()
    sol = solve_vanishing_params(minus_family, Fraction(39, 94),
                                 [(2, 1, 0), (1, 2, 0), (1, 1, 0)])
    assert sol == {"t": Fraction(63, 136)}


def test_numeric_cross_check(minus_family):
    alpha = Fraction(-39, 94)
    combo = residue_minus(minus_family, 1, 1, 0, alpha).substitute({0: 1})
    quad = numeric_sides(residue_sides(minus_family, [1, 1, 0], alpha), {0: Fraction(1)})
    assert combo.numeric() == pytest.approx(quad, rel=1e-10)
    assert quad == pytest.approx(-0.0016806155769518848, rel=1e-10)


def test_plus_residues(plus_family):
    assert residue_plus(plus_family, 1, 1, Fraction(-11, 40)).is_zero()
    r = residue_plus(plus_family, 3, 9, Fraction(-51, 40))
    assert r.render() == "-2/8525 * B(-1/5, 3/4)"
    assert r.is_transcendence_witness
    quad = numeric_sides(residue_sides(plus_family, [3, 9], Fraction(-51, 40)), {0: Fraction(1)})
    assert r.numeric() == pytest.approx(quad, rel=1e-10)


def test_order_two_pole(minus_family):
    with pytest.raises(OrderTwoPole):
        residue_minus(build_minus_family(CharSeq(2, 3, 2, 1), [], (3, 2)), 1, 1, 0,
                      Fraction(-1, 2))


def test_json_round_trip(minus_family, tmp_path):
    data = family_to_json(minus_family, {"t": Fraction(1, 3)})
    text = json.dumps(data, sort_keys=True)
    fam, values = family_from_json(json.loads(text))
    assert fam.f == minus_family.f and values == {"t": Fraction(1, 3)}
    assert json.dumps(family_to_json(fam, values), sort_keys=True) == text


def test_positivity_flag(minus_family):
    assert positivity_check(minus_family, {"t": Fraction(1)}, grid=40) is True
    assert positivity_check(minus_family, {"t": Fraction(-2)}, grid=40) is False
    assert positivity_check(minus_family) is None


def test_claim1_example():
    data = claim1_enumerate(CharSeq(2, 3, 2, 1), 1)
    assert (data.i0, data.j0) == (1, 2) and data.beta == Fraction(1, 2)
    with pytest.raises(KInSemigroup):
        claim1_enumerate(CharSeq(2, 3, 2, 1), 2)
    fam, targets, beta = claim1_family(CharSeq(2, 3, 2, 1), 1)
    assert solve_vanishing_params(fam, beta, targets) == {"t1": Fraction(-1, 4)}


@pytest.mark.parametrize("cs", [CharSeq(3, 4, 2, 1), CharSeq(3, 5, 2, 1), CharSeq(2, 5, 2, 3),
                                CharSeq(2, 3, 2, 1), CharSeq(2, 3, 3, 4)])
def test_claim_families_kill_targets(cs):
    _, b12, _, b22 = split_sets(cs)
    for beta in b12[:3]:
        fam, targets, b = claim1_family(cs, b1_shift(cs, beta))
        assert b == beta
        sol = solve_vanishing_params(fam, beta, targets)
        idx = {fam.params.index(k): v for k, v in sol.items()}
        for t in targets:
            assert residue(fam, t, -beta).substitute(idx).is_zero()
    for beta in b22[:3]:
        fam, targets, b = claim2_family(cs, b2_shift(cs, beta))
        assert b == beta
        sol = solve_vanishing_params(fam, beta, targets)
        idx = {fam.params.index(k): v for k, v in sol.items()}
        for t in targets:
            assert residue(fam, t, -beta).substitute(idx).is_zero()


def test_minimal_ab():
    assert minimal_ab(CS, 22) == (2, 3)
    assert minimal_ab(CS, 11) is None
