"""Exact rationals and numerical semigroups.

Rationals are plain ``fractions.Fraction`` values. Semigroups keep a
membership table up to conductor + max(generator); everything above is a
member by definition of the conductor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from functools import reduce

import gmpy2

from .errors import EmptyGenerators, GcdNotOne, IrrationalFactor

Rational = Fraction


def parse_rational(text) -> Fraction:
    """Parse "p/q", an int or a Fraction into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


def frac_part(r: Fraction) -> Fraction:
    return r - (r.numerator // r.denominator)


def is_integer(r: Fraction) -> bool:
    return r.denominator == 1


def rational_power(base: Fraction, exponent: Fraction) -> Fraction:
    """base**exponent when the result is rational, else IrrationalFactor."""
    base = Fraction(base)
    exponent = Fraction(exponent)
    if base <= 0:
        if base == 0 and exponent > 0:
            return Fraction(0)
        raise IrrationalFactor(f"non-positive base {base} to power {exponent}")
    p, q = exponent.numerator, exponent.denominator
    roots = []
    for part in (base.numerator, base.denominator):
        root, exact = gmpy2.iroot(part, q)
        if not exact:
            raise IrrationalFactor(f"{base}^(1/{q}) is irrational")
        roots.append(int(root))
    root = Fraction(roots[0], roots[1])
    return root ** p


@dataclass(frozen=True)
class NumericalSemigroup:
    """Submonoid of the non-negative integers with finite complement.

    ``generators`` keeps the caller's order; it fixes the coordinate order
    used by :func:`sg_decompose`.
    """

    generators: tuple
    conductor: int
    _table: tuple = field(repr=False, compare=False)

    def __contains__(self, n: int) -> bool:
        return sg_contains(self, n)

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def gaps(self) -> list:
        return sg_gaps(self)


def sg_new(generators) -> NumericalSemigroup:
    gens = tuple(int(g) for g in generators)
    if not gens:
        raise EmptyGenerators("no generators given")
    if any(g < 1 for g in gens):
        raise ValueError(f"generators must be positive: {gens}")
    if reduce(gcd, gens) != 1:
        raise GcdNotOne(f"gcd of {gens} is {reduce(gcd, gens)}")
    small = min(gens)
    table = [True]
    run = 1 if small == 1 else 0
    n = 0
    # grow until `small` consecutive members are seen; after that every
    # integer is a member
    while run < small:
        n += 1
        member = any(n >= g and table[n - g] for g in gens)
        table.append(member)
        run = run + 1 if member else 0
    conductor = n - small + 1 if small > 1 else 0
    top = conductor + max(gens)
    while len(table) <= top:
        table.append(True)
    return NumericalSemigroup(gens, conductor, tuple(table))


def sg_contains(S: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    if n >= S.conductor:
        return True
    return S._table[n]


def sg_frobenius(S: NumericalSemigroup) -> int:
    return S.conductor - 1


def sg_gaps(S: NumericalSemigroup) -> list:
    return [n for n in range(S.conductor) if not S._table[n]]


def sg_decompose(S: NumericalSemigroup, n: int):
    """Lexicographically smallest coefficient vector writing n, or None."""
    if n < 0 or not sg_contains(S, n):
        return None
    gens = S.generators
    k = len(gens)
    # reach[i][v]: v is a combination of gens[i:]
    reach = [None] * (k + 1)
    reach[k] = [v == 0 for v in range(n + 1)]
    for i in range(k - 1, -1, -1):
        g = gens[i]
        row = list(reach[i + 1])
        for v in range(g, n + 1):
            if row[v - g]:
                row[v] = True
        reach[i] = row
    coeffs = []
    rest = n
    for i, g in enumerate(gens):
        c = 0
        while not reach[i + 1][rest - c * g]:
            c += 1
        coeffs.append(c)
        rest -= c * g
    return tuple(coeffs)
