"""Closed-form invariants of a characteristic sequence (n1, m, n2, q).

The germ has characteristic sequence (n1*n2, m*n2, m*n1*n2 + q). All sets
are returned as sorted lists of Fractions; the spectrum is a multiset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .errors import EigenvalueConditionViolated, InvalidCharSeq
from .exact import NumericalSemigroup, sg_contains, sg_new


@dataclass(frozen=True)
class CharSeq:
    n1: int
    m: int
    n2: int
    q: int

    def __post_init__(self):
        n1, m, n2, q = self.n1, self.m, self.n2, self.q
        if not 1 < n1 < m:
            raise InvalidCharSeq(f"need 1 < n1 < m, got n1={n1}, m={m}")
        if gcd(m, n1) != 1:
            raise InvalidCharSeq(f"need gcd(m, n1) = 1, got {gcd(m, n1)}")
        if q <= 0:
            raise InvalidCharSeq(f"need q > 0, got {q}")
        if n2 <= 1:
            raise InvalidCharSeq(f"need n2 > 1, got {n2}")
        if gcd(q, n2) != 1:
            raise InvalidCharSeq(f"need gcd(q, n2) = 1, got {gcd(q, n2)}")

    @property
    def N1(self) -> int:
        return self.m * self.n1 * self.n2

    @property
    def D(self) -> int:
        return self.m * self.n1 * self.n2 + self.q

    @property
    def distinct_eigenvalues(self) -> bool:
        return gcd(self.q, self.n1) == 1 or gcd(self.q, self.m) == 1

    @property
    def sequence(self) -> tuple:
        return (self.n1 * self.n2, self.m * self.n2, self.D)

    @property
    def qtilde(self) -> int:
        return self.m // self.n1

    @property
    def h(self) -> int:
        return self.q // self.n2

    @cached_property
    def gamma1(self) -> NumericalSemigroup:
        return sg_new([self.m, self.n1])

    @cached_property
    def gamma(self) -> NumericalSemigroup:
        return sg_new([self.n1 * self.n2, self.m * self.n2, self.D])

    def as_tuple(self) -> tuple:
        return (self.n1, self.m, self.n2, self.q)


def milnor(cs: CharSeq) -> int:
    return cs.n2 * (cs.n1 - 1) * (cs.m - 1) + (cs.n2 - 1) * (cs.D - 1)


def spectrum_parts(cs: CharSeq):
    """The two halves A1, A2 of the spectrum below 1 (as sorted lists)."""
    n1, m, n2 = cs.n1, cs.m, cs.n2
    a1 = []
    for i in range(1, n1):
        for j in range(1, m):
            inner = Fraction(i, n1) + Fraction(j, m)
            if inner < 1:
                for r in range(n2):
                    a1.append(inner / n2 + Fraction(r, n2))
    a2 = []
    D = cs.D
    for i in range(1, n2):
        for j in range(1, D):
            val = Fraction(i, n2) + Fraction(j, D)
            if val >= 1:
                break
            a2.append(val)
    return sorted(a1), sorted(a2)


def spectrum(cs: CharSeq) -> list:
    a1, a2 = spectrum_parts(cs)
    lower = a1 + a2
    return sorted(lower + [2 - a for a in lower])


def yano_sets(cs: CharSeq):
    n1, m, n2, q = cs.n1, cs.m, cs.n2, cs.q
    N1, D = cs.N1, cs.D
    b1 = []
    for k in range(N1):
        num = m + n1 + k
        # n2*m*alpha = num/n1 and n2*n1*alpha = num/m
        if num % n1 and num % m:
            b1.append(Fraction(num, N1))
    b2 = []
    for k in range(n2 * D):
        num = (m + n1) * n2 + q + k
        # n2*alpha = num/D and D*alpha = num/n2
        if num % D and num % n2:
            b2.append(Fraction(num, n2 * D))
    return b1, b2


def b1_shift(cs: CharSeq, beta: Fraction) -> int:
    """k with beta = (m + n1 + k)/(m n1 n2)."""
    return int(beta * cs.N1) - cs.m - cs.n1


def b2_shift(cs: CharSeq, beta: Fraction) -> int:
    """k with beta = ((m + n1) n2 + q + k)/(n2 D)."""
    return int(beta * cs.n2 * cs.D) - (cs.m + cs.n1) * cs.n2 - cs.q


def in_B1(cs: CharSeq, beta: Fraction) -> bool:
    num = beta * cs.N1
    if num.denominator != 1 or not 0 <= num - cs.m - cs.n1 < cs.N1:
        return False
    num = int(num)
    return bool(num % cs.n1 and num % cs.m)


def in_B2(cs: CharSeq, beta: Fraction) -> bool:
    num = beta * cs.n2 * cs.D
    low = (cs.m + cs.n1) * cs.n2 + cs.q
    if num.denominator != 1 or not 0 <= num - low < cs.n2 * cs.D:
        return False
    num = int(num)
    return bool(num % cs.D and num % cs.n2)


def in_B11(cs: CharSeq, beta: Fraction) -> bool:
    return in_B1(cs, beta) and sg_contains(cs.gamma1, b1_shift(cs, beta))


def in_B21(cs: CharSeq, beta: Fraction) -> bool:
    return in_B2(cs, beta) and sg_contains(cs.gamma, b2_shift(cs, beta))


def split_sets(cs: CharSeq):
    b1, b2 = yano_sets(cs)
    g1, g = cs.gamma1, cs.gamma
    b11 = [b for b in b1 if sg_contains(g1, b1_shift(cs, b))]
    b12 = [b for b in b1 if not sg_contains(g1, b1_shift(cs, b))]
    b21 = [b for b in b2 if sg_contains(g, b2_shift(cs, b))]
    b22 = [b for b in b2 if not sg_contains(g, b2_shift(cs, b))]
    return b11, b12, b21, b22


def common_roots(cs: CharSeq) -> list:
    if not cs.distinct_eigenvalues:
        raise EigenvalueConditionViolated(
            f"gcd(q, n1) = {gcd(cs.q, cs.n1)} and gcd(q, m) = {gcd(cs.q, cs.m)}")
    b11, _, b21, _ = split_sets(cs)
    return sorted(set(b11) | set(b21))


def always_roots_E(cs: CharSeq) -> list:
    spec = spectrum(cs)
    bound = spec[0] + 1
    return [a for a in spec if a < bound]


def sum_closed_forms(cs: CharSeq):
    n1, m, n2, q = cs.n1, cs.m, cs.n2, cs.q
    sum_b1 = n1 + m - cs.qtilde - 3 + Fraction(n2 * (m - 1) * (n1 - 1), 2)
    sum_b2 = ((m + n1) * n2 + q - (m + n1 + cs.h) - 1
              + Fraction((n2 - 1) * (cs.D - 1), 2))
    return sum_b1, sum_b2


def dim_bounds(cs: CharSeq):
    """(lower, upper, generic_dim) for the dimension of the lattice quotient.

    generic_dim is the direct sum difference; under the eigenvalue
    condition it must coincide with the closed-form upper bound.
    """
    n1, m, n2, q = cs.n1, cs.m, cs.n2, cs.q
    mu = milnor(cs)
    lower = (n2 - 1) * (m - 1) * (n1 - 1)
    upper = mu // 2 - n2 * (m + n1) - q + cs.qtilde + cs.h + 4
    b1, b2 = yano_sets(cs)
    diff = sum(spectrum(cs)) - sum(set(b1) | set(b2))
    generic = int(diff) if diff.denominator == 1 else diff
    if cs.distinct_eigenvalues and generic != upper:
        raise AssertionError(f"sum difference {generic} != upper bound {upper}")
    return lower, upper, generic


def tjurina_bound(cs: CharSeq) -> int:
    """mu/2 + n2(m + n1) + q - qtilde - h - 4, i.e. mu minus the upper bound."""
    mu = milnor(cs)
    return mu // 2 + cs.n2 * (cs.m + cs.n1) + cs.q - cs.qtilde - cs.h - 4


def tjurina_bound_at_lower(cs: CharSeq) -> int:
    """mu minus the lower dimension bound.

    This is the Hertling-Stahlke value for a germ whose quotient has the
    smallest dimension allowed, e.g. 58 for (4, 5, 2, 7).
    """
    lower, _, _ = dim_bounds(cs)
    return milnor(cs) - lower


@dataclass(frozen=True)
class InvariantReport:
    cs: CharSeq
    mu: int
    alpha1: Fraction
    spectrum: tuple
    B1: tuple
    B2: tuple
    B11: tuple
    B12: tuple
    B21: tuple
    B22: tuple
    CR: tuple
    E: tuple
    dim_lower: int
    dim_upper: int
    generic_dim: int
    tjurina_lower: int
    tjurina_at_dim_lower: int
    qtilde: int
    h: int
    distinct_eigenvalues: bool


def invariant_report(cs: CharSeq) -> InvariantReport:
    spec = spectrum(cs)
    b1, b2 = yano_sets(cs)
    b11, b12, b21, b22 = split_sets(cs)
    cr = common_roots(cs) if cs.distinct_eigenvalues else []
    lower, upper, generic = dim_bounds(cs)
    return InvariantReport(
        cs=cs, mu=milnor(cs), alpha1=spec[0], spectrum=tuple(spec),
        B1=tuple(b1), B2=tuple(b2), B11=tuple(b11), B12=tuple(b12),
        B21=tuple(b21), B22=tuple(b22), CR=tuple(cr),
        E=tuple(always_roots_E(cs)), dim_lower=lower, dim_upper=upper,
        generic_dim=generic, tjurina_lower=tjurina_bound(cs),
        tjurina_at_dim_lower=milnor(cs) - lower,
        qtilde=cs.qtilde, h=cs.h, distinct_eigenvalues=cs.distinct_eigenvalues,
    )


def admissible_grid(max_n1n2m: int = 120, max_q: int = 12, simple_only: bool = True):
    """All CharSeqs with m*n1*n2 <= max_n1n2m and q <= max_q."""
    out = []
    for n1 in range(2, max_n1n2m):
        for m in range(n1 + 1, max_n1n2m):
            if n1 * m * 2 > max_n1n2m:
                break
            if gcd(m, n1) != 1:
                continue
            for n2 in range(2, max_n1n2m // (n1 * m) + 1):
                for q in range(1, max_q + 1):
                    if gcd(q, n2) != 1:
                        continue
                    cs = CharSeq(n1, m, n2, q)
                    if simple_only and not cs.distinct_eigenvalues:
                        continue
                    out.append(cs)
    return out
