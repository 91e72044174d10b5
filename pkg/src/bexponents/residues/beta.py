"""Exact linear combinations of beta values.

A BetaCombo is sum_i r_i(t) B(u_i, v_i) + r_0(t) with r_i in Q[t]. Each
B(u, v) is stored in a canonical form: u, v keep their classes mod 1,
u <= v, and u + v < 1 unless the fractional parts add up to exactly 1.
Moving between representatives only multiplies by rational Pochhammer
ratios, so equal beta classes collapse into one coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm

from ..errors import IntegerBetaArgument, UnpairedTerm
from ..exact import frac_part, rational_power
from ..polyring import ParamCoef


def gamma_ratio(x: Fraction, x0: Fraction) -> Fraction:
    """Gamma(x)/Gamma(x0) for x - x0 an integer and x, x0 not poles."""
    d = x - x0
    if d.denominator != 1:
        raise ValueError(f"{x} - {x0} is not an integer")
    out = Fraction(1)
    if d >= 0:
        for k in range(int(d)):
            out *= x0 + k
    else:
        for k in range(int(-d)):
            out /= x + k
    return out


def _is_nonpositive_int(r: Fraction) -> bool:
    return r.denominator == 1 and r <= 0


def canonical_beta(s1, s2):
    """(factor, (u, v)) with B(s1, s2) = factor * B(u, v).

    (u, v) is None when B(s1, s2) is rational; then factor is its value.
    """
    s1, s2 = Fraction(s1), Fraction(s2)
    if _is_nonpositive_int(s1) or _is_nonpositive_int(s2):
        raise IntegerBetaArgument(f"B({s1}, {s2}) has a non-positive integer argument")
    if s1.denominator == 1 or s2.denominator == 1:
        n, other = (s1, s2) if s1.denominator == 1 else (s2, s1)
        # B(n, v) = (n-1)! / (v (v+1) ... (v+n-1))
        value = Fraction(factorial(int(n) - 1))
        for k in range(int(n)):
            value /= other + k
        return value, None
    w = s1 + s2
    if _is_nonpositive_int(w):
        return Fraction(0), None
    fu, fv = frac_part(s1), frac_part(s2)
    if fu + fv > 1:
        if fu >= fv:
            fu -= 1
        else:
            fv -= 1
    factor = gamma_ratio(s1, fu) * gamma_ratio(s2, fv) / gamma_ratio(w, fu + fv)
    return factor, tuple(sorted((fu, fv)))


class BetaCombo:
    def __init__(self, params=()):
        self.params = tuple(params)
        self.terms = {}
        self.pure = ParamCoef()

    def copy(self):
        out = BetaCombo(self.params)
        out.terms = dict(self.terms)
        out.pure = self.pure
        return out

    def add_beta(self, coef, s1, s2):
        """Add coef * B(s1, s2), rewritten in canonical form."""
        coef = ParamCoef.lift(coef)
        if coef.is_zero():
            return self
        factor, key = canonical_beta(s1, s2)
        if key is None:
            self.pure = self.pure + coef * factor
            return self
        new = self.terms.get(key, ParamCoef()) + coef * factor
        if new.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = new
        return self

    def add_pure(self, coef):
        self.pure = self.pure + ParamCoef.lift(coef)
        return self

    def __add__(self, other):
        out = self.copy()
        if len(other.params) > len(out.params):
            out.params = other.params
        for key, c in other.terms.items():
            new = out.terms.get(key, ParamCoef()) + c
            if new.is_zero():
                out.terms.pop(key, None)
            else:
                out.terms[key] = new
        out.pure = out.pure + other.pure
        return out

    def scale(self, factor):
        out = BetaCombo(self.params)
        for key, c in self.terms.items():
            cc = c * factor
            if not cc.is_zero():
                out.terms[key] = cc
        out.pure = self.pure * factor
        return out

    def substitute(self, values):
        """Replace parameters (dict index -> rational)."""
        out = BetaCombo(self.params)
        for key, c in self.terms.items():
            cc = c.substitute(values)
            if not cc.is_zero():
                out.terms[key] = cc
        out.pure = self.pure.substitute(values)
        return out

    def substitute_named(self, values):
        return self.substitute({self.params.index(k): Fraction(v) for k, v in values.items()})

    def is_zero(self):
        return not self.terms and self.pure.is_zero()

    def coefficients(self):
        """All coefficient polynomials, beta classes in order then the pure part."""
        out = [self.terms[k] for k in sorted(self.terms)]
        if not self.pure.is_zero():
            out.append(self.pure)
        return out

    def free_params(self):
        out = set()
        for c in self.coefficients():
            out |= c.free_params()
        return out

    @property
    def is_transcendence_witness(self):
        # canonical beta terms never have integer arguments
        return bool(self.terms)

    def numeric(self, values=None):
        import mpmath
        values = values or {}
        idx = {self.params.index(k) if isinstance(k, str) else k: Fraction(v)
               for k, v in values.items()}
        total = mpmath.mpf(0)
        with mpmath.workdps(30):
            for (u, v), c in self.terms.items():
                cv = c.substitute(idx).constant_value()
                total += mpmath.mpf(cv.numerator) / cv.denominator * mpmath.beta(
                    mpmath.mpf(u.numerator) / u.denominator, mpmath.mpf(v.numerator) / v.denominator)
            pv = self.pure.substitute(idx).constant_value()
            total += mpmath.mpf(pv.numerator) / pv.denominator
        return float(total)

    def render(self):
        pieces = []
        for (u, v) in sorted(self.terms):
            pieces.append(f"{render_coef(self.terms[(u, v)], self.params)} * B({u}, {v})")
        if not self.pure.is_zero():
            pieces.append(render_coef(self.pure, self.params))
        if not pieces:
            return "0"
        text = pieces[0]
        for piece in pieces[1:]:
            text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"BetaCombo({self.render()})"

    def __eq__(self, other):
        if not isinstance(other, BetaCombo):
            return NotImplemented
        return self.terms == other.terms and self.pure == other.pure


def render_coef(c: ParamCoef, names=()) -> str:
    """'3/5' for constants, '(136*t - 63)/447440' otherwise."""
    names = list(names) + [f"t{i + 1}" for i in range(len(names), c.nparams())]
    if c.is_constant():
        return str(c.constant_value())
    den = 1
    for v in c.terms.values():
        den = lcm(den, v.denominator)
    body = ParamCoef({k: v * den for k, v in c.terms.items()}).render(names)
    return f"({body})" if den == 1 else f"({body})/{den}"


def pair_to_beta(side1, side2, params=()):
    """Pair G-terms of the two charts into beta values.

    side1, side2: lists of (GTerm, s). A side-1 term z^e (c0 + c1 z^p)^E at
    s pairs with the side-2 term of the same E whose total exponent is
    -p E - (e + s), over the swapped base (c1 + c0 z^p)^E. The pair sums to
    coef * c0^E (c0/c1)^(sigma1/p) / p * B(sigma1/p, sigma2/p).
    """
    index = {}
    for g, s in side2:
        key = (g.base_exponent, g.var_exponent + Fraction(s))
        if key in index:
            raise UnpairedTerm(f"two side-2 terms share exponent data {key}")
        index[key] = g
    combo = BetaCombo(params)
    used = set()
    for g, s in side1:
        E, p = g.base_exponent, g.base_p
        sigma1 = g.var_exponent + Fraction(s)
        key = (E, -p * E - sigma1)
        partner = index.get(key)
        if (partner is None or partner.coef != g.coef or partner.base_p != p
                or partner.base_c0 != g.base_c1 or partner.base_c1 != g.base_c0):
            raise UnpairedTerm(f"side-1 term {g} at s = {s} has no partner")
        used.add(key)
        sigma2 = -p * E - sigma1
        const = (rational_power(g.base_c0, E)
                 * rational_power(g.base_c0 / g.base_c1, sigma1 / p) / p)
        combo.add_beta(g.coef * const, sigma1 / p, sigma2 / p)
    orphans = [k for k in index if k not in used]
    if orphans:
        raise UnpairedTerm(f"side-2 terms without partner: {orphans}")
    return combo
