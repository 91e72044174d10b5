"""Taylor coefficients of rational powers of a chart function along an axis.

Along the axis {transverse = 0} the chart function is A(z) + u where
A = (c0 + c1 z^p)^e. Then

    [T^nu] (A + u)^alpha = sum_j C(alpha, j) A^(alpha - j) [T^nu] u^j

and every piece is a finite sum of monomials z^b (c0 + c1 z^p)^E, kept as
GTerms with exact coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..polyring import MPoly, ParamCoef
from .families import AxisBase, factor_axis


@dataclass(frozen=True)
class GTerm:
    """coef * z^var_exponent * (base_c0 + base_c1 z^base_p)^base_exponent."""
    coef: ParamCoef
    var_exponent: int
    base_c0: Fraction
    base_c1: Fraction
    base_p: int
    base_exponent: Fraction


def _slices(poly: MPoly, var: str, top: int):
    """Coefficients of var^k, k <= top, as dicts z-exponent -> ParamCoef."""
    other = 1 if var == "x" else 0
    idx = 1 - other
    out = [dict() for _ in range(top + 1)]
    for key, c in poly.terms.items():
        if key[idx] <= top:
            out[key[idx]][key[other]] = c
    return out


def _mul_trunc(a, b, top):
    """Product of T-polynomials with z-polynomial coefficients, mod T^(top+1)."""
    out = [dict() for _ in range(top + 1)]
    for i, pa in enumerate(a):
        if not pa:
            continue
        for j in range(top + 1 - i):
            pb = b[j]
            if not pb:
                continue
            acc = out[i + j]
            for ea, ca in pa.items():
                for eb, cb in pb.items():
                    e = ea + eb
                    s = acc[e] + ca * cb if e in acc else ca * cb
                    if s.is_zero():
                        acc.pop(e, None)
                    else:
                        acc[e] = s
    return out


def derivative_terms(poly: MPoly, alpha, nu: int, axis: str, base: AxisBase | None = None):
    """GTerms for (1/nu!) d^nu/d(axis)^nu poly^alpha restricted to axis = 0.

    ``axis`` names the transverse variable ('x' for the first chart, 'y'
    for the second); the surviving variable is the other one.
    """
    alpha = Fraction(alpha)
    base = base or factor_axis(poly, axis)
    if nu < 0:
        return []
    slices = _slices(poly, axis, nu)
    u = [dict() for _ in range(nu + 1)]
    for k in range(1, nu + 1):
        u[k] = slices[k]
    power = [dict() for _ in range(nu + 1)]
    power[0] = {0: ParamCoef.const(1)}
    binom = Fraction(1)
    collected = {}
    for j in range(nu + 1):
        if j:
            power = _mul_trunc(power, u, nu)
            binom = binom * (alpha - j + 1) / j
        for e, c in power[nu].items():
            key = (e, base.e * (alpha - j))
            s = collected[key] + c * binom if key in collected else c * binom
            collected[key] = s
    terms = []
    for (e, E), c in sorted(collected.items()):
        if not c.is_zero():
            terms.append(GTerm(c, e, base.c0, base.c1, base.p, E))
    return terms


def terms_to_mpoly_at(terms, z: float, params=None) -> float:
    """Float value of a GTerm list at the point z (for spot checks)."""
    total = 0.0
    for t in terms:
        c = t.coef.evaluate(params or {}) if t.coef.free_params() else t.coef.constant_value()
        total += float(c) * z ** t.var_exponent * (
            float(t.base_c0) + float(t.base_c1) * z ** t.base_p) ** float(t.base_exponent)
    return total
