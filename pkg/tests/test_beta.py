from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from bexponents.errors import IntegerBetaArgument, UnpairedTerm
from bexponents.polyring import ParamCoef
from bexponents.residues.beta import BetaCombo, canonical_beta, gamma_ratio, pair_to_beta
from bexponents.residues.terms import GTerm


def mp(r):
    return mpmath.mpf(r.numerator) / r.denominator


def test_gamma_ratio():
    assert gamma_ratio(Fraction(7, 2), Fraction(1, 2)) == Fraction(15, 8)
    assert gamma_ratio(Fraction(-1, 2), Fraction(1, 2)) == -2


def test_canonical_beta_special_cases():
    assert canonical_beta(2, Fraction(1, 2)) == (Fraction(4, 3), None)
    assert canonical_beta(Fraction(-1, 3), Fraction(-2, 3)) == (0, None)
    with pytest.raises(IntegerBetaArgument):
        canonical_beta(0, Fraction(1, 2))
    factor, key = canonical_beta(Fraction(-4, 47), Fraction(1, 2))
    assert (factor, key) == (1, (Fraction(-4, 47), Fraction(1, 2)))


def test_headline_beta_value():
    with mpmath.workdps(30):
        value = mpmath.beta(mp(Fraction(-4, 47)), mpmath.mpf(1) / 2)
    assert float(value) == pytest.approx(-10.3010223801555, rel=1e-12)


args = st.fractions(min_value=-6, max_value=6, max_denominator=12).filter(
    lambda r: r.denominator != 1)


@settings(max_examples=200, deadline=None)
@given(args, args)
def test_canonical_beta_value(s1, s2):
    w = s1 + s2
    if w.denominator == 1 and w <= 0:
        assert canonical_beta(s1, s2) == (0, None)
        return
    factor, (u, v) = canonical_beta(s1, s2)
    assert u <= v and frac_class(u) in (frac_class(s1), frac_class(s2))
    with mpmath.workdps(30):
        want = mpmath.beta(mp(s1), mp(s2))
        got = mp(factor) * mpmath.beta(mp(u), mp(v))
        assert abs(got - want) <= mpmath.mpf(10) ** -20 * max(1, abs(want))


def frac_class(r):
    return r - (r.numerator // r.denominator)


def test_combo_merging_and_render():
    t = ParamCoef.param(0)
    c = BetaCombo(("t",))
    c.add_beta(t, Fraction(1, 3), Fraction(1, 3))
    c.add_beta(-t, Fraction(1, 3), Fraction(1, 3))
    assert c.is_zero() and not c.is_transcendence_witness
    c.add_beta(136 * t - 63, Fraction(-4, 47), Fraction(1, 2))
    assert c.scale(Fraction(1, 447440)).render() == "(136*t - 63)/447440 * B(-4/47, 1/2)"
    assert c.substitute({0: Fraction(63, 136)}).is_zero()
    assert c.is_transcendence_witness


def test_pair_to_beta_matches_integrals():
    # G over z (1 + 4 z^2)^(-5/4) at s = 0 plus its partner equals the beta term
    E = Fraction(-5, 4)
    g1 = GTerm(ParamCoef.const(3), 1, Fraction(1), Fraction(4), 2, E)
    sigma2 = -2 * E - 1
    g2 = GTerm(ParamCoef.const(3), 0, Fraction(4), Fraction(1), 2, E)
    combo = pair_to_beta([(g1, Fraction(0))], [(g2, sigma2)])
    with mpmath.workdps(30):
        f1 = mpmath.quad(lambda z: (1 + 4 * z ** 2) ** mp(E), [0, 1])
        f2 = mpmath.quad(lambda z: z ** (mp(sigma2) - 1) * (4 + z ** 2) ** mp(E), [0, 1])
    assert combo.numeric() == pytest.approx(3 * float(f1 + f2), rel=1e-12)
    with pytest.raises(UnpairedTerm):
        pair_to_beta([(g1, Fraction(0))], [])
