"""Residues of the integrals attached to plus and minus families.

Plus:  at alpha = -(m b1 + n1 b2 + nu)/(m n1 n2) the residue is
       1/(m n1 n2) [G_{h1}(n1 b2) + G_{h2}(m b1)], h_i the nu-th Taylor
       coefficients of f_i^alpha along the axes.
Minus: at a candidate of the second progression the residue is
       sum_i b_i [G_{h1,i}(q(b3 + i)) + G_{h2,i}(S2)] with b_i read off h4.
       The overall constant 1/(n2 q) is not applied; see residue_minus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import OrderTwoPole
from ..invariants import CharSeq
from ..polyring import binomial_poly
from .beta import BetaCombo, pair_to_beta
from .families import MinusFamily, PlusFamily
from .terms import derivative_terms


@dataclass(frozen=True)
class Progression:
    """Candidates -(base + nu)/den for nu = 0, 1, 2, ..."""
    base: int
    den: int

    def nu(self, alpha):
        """nu with alpha = -(base + nu)/den, or None."""
        val = -Fraction(alpha) * self.den - self.base
        if val.denominator != 1 or val < 0:
            return None
        return int(val)

    def is_candidate(self, alpha) -> bool:
        return self.nu(alpha) is not None

    def first(self) -> Fraction:
        return Fraction(-self.base, self.den)

    def abscissa(self) -> Fraction:
        """The integral converges for Re(s) above this value."""
        return Fraction(-self.base, self.den)


@dataclass(frozen=True)
class PlusPoles:
    P: Progression

    def is_candidate(self, alpha) -> bool:
        return self.P.is_candidate(alpha)


@dataclass(frozen=True)
class MinusPoles:
    P1: Progression
    b3: int
    n2: int
    q: int
    D: int
    b12: int

    def P2(self, i: int) -> Progression:
        return Progression(self.n2 * self.b12 + self.q * (self.b3 + i), self.n2 * self.D)

    def second_family(self, alpha):
        """[(i, nu_i)] with alpha = -(n2(m b1 + n1 b2 + m n1 b3) + q(b3 + i) + nu_i)/(n2 D)."""
        total = -Fraction(alpha) * self.n2 * self.D - self.n2 * self.b12 - self.q * self.b3
        if total.denominator != 1:
            return []
        total = int(total)
        return [(i, total - self.q * i) for i in range(1, total // self.q + 1)
                if total - self.q * i >= 0]

    def is_candidate(self, alpha) -> bool:
        return self.P1.is_candidate(alpha) or bool(self.second_family(alpha))

    def abscissa(self) -> Fraction:
        return self.P1.abscissa()


def pole_candidates_plus(cs: CharSeq, b1: int, b2: int) -> PlusPoles:
    return PlusPoles(Progression(cs.m * b1 + cs.n1 * b2, cs.N1))


def pole_candidates_minus(cs: CharSeq, b1: int, b2: int, b3: int) -> MinusPoles:
    b12 = cs.m * b1 + cs.n1 * b2 + cs.m * cs.n1 * b3
    return MinusPoles(Progression(b12, cs.N1), b3, cs.n2, cs.q, cs.D, b12)


def plus_sides(F: PlusFamily, b1: int, b2: int, alpha):
    """[(weight, side1, side2)] whose paired sum is the plus residue."""
    cs = F.cs
    nu = pole_candidates_plus(cs, b1, b2).P.nu(alpha)
    if nu is None:
        return []
    side1 = [(g, cs.n1 * b2) for g in derivative_terms(F.f1, alpha, nu, "x", F.base1)]
    side2 = [(g, cs.m * b1) for g in derivative_terms(F.f2, alpha, nu, "y", F.base2)]
    return [(Fraction(1, cs.N1), side1, side2)]


def h4_coefficients(cs: CharSeq, b2: int, b3: int):
    """b_i (i = 1, 2, ...) with y^b3 h4(y) = (1 - (1-y)^(m n1))^b3 (1-y)^(n1 b2 - 1)."""
    poly = (1 - binomial_poly(cs.m * cs.n1)) ** b3 * binomial_poly(cs.n1 * b2 - 1)
    h4 = poly.monomial_divide(deg_y=b3)
    top = h4.degree("y")
    return [h4.terms[(0, j)].constant_value() if (0, j) in h4.terms else Fraction(0)
            for j in range(top + 1)]


def minus_sides(F: MinusFamily, b1: int, b2: int, b3: int, alpha):
    """[(b_i, side1_i, side2_i)] whose weighted paired sum is the minus residue."""
    cs = F.cs
    poles = pole_candidates_minus(cs, b1, b2, b3)
    if poles.P1.is_candidate(alpha):
        raise OrderTwoPole(f"{alpha} lies in both progressions for {(b1, b2, b3)}")
    pairs = poles.second_family(alpha)
    if not pairs:
        return []
    bs = h4_coefficients(cs, b2, b3)
    s2 = cs.n2 * (cs.N1 * Fraction(alpha) + poles.b12)
    out = []
    for i, nu in pairs:
        if i > len(bs) or bs[i - 1] == 0:
            continue
        s1 = cs.q * (b3 + i)
        side1 = [(g, s1) for g in derivative_terms(F.f1, alpha, nu, "x", F.base1)]
        side2 = [(g, s2) for g in derivative_terms(F.f2, alpha, nu, "y", F.base2)]
        out.append((bs[i - 1], side1, side2))
    return out


def _combine(sides, params):
    total = BetaCombo(params)
    for weight, side1, side2 in sides:
        total = total + pair_to_beta(side1, side2, params).scale(weight)
    return total


def residue_plus(F: PlusFamily, b1: int, b2: int, alpha) -> BetaCombo:
    return _combine(plus_sides(F, b1, b2, Fraction(alpha)), F.params)


def residue_minus(F: MinusFamily, b1: int, b2: int, b3: int, alpha) -> BetaCombo:
    """Minus residue up to the positive constant n2*q.

    The returned combination is sum_i b_i (G1 + G2) without the 1/(n2 q)
    prefactor. With this normalization the (4, 5, 2, 7) family gives
    (136*t - 63)/447440 * B(-4/47, 1/2) at alpha = -39/94; vanishing and
    transcendence are unaffected by the constant.
    """
    return _combine(minus_sides(F, b1, b2, b3, Fraction(alpha)), F.params)


def residue(F, betas, alpha) -> BetaCombo:
    if F.sign == "+":
        return residue_plus(F, betas[0], betas[1], alpha)
    b3 = betas[2] if len(betas) > 2 else 0
    return residue_minus(F, betas[0], betas[1], b3, alpha)


def residue_sides(F, betas, alpha):
    if F.sign == "+":
        return plus_sides(F, betas[0], betas[1], Fraction(alpha))
    b3 = betas[2] if len(betas) > 2 else 0
    return minus_sides(F, betas[0], betas[1], b3, Fraction(alpha))
