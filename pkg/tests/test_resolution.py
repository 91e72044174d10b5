from fractions import Fraction

import pytest

from bexponents.errors import NotInB11orB21
from bexponents.invariants import CharSeq, split_sets
from bexponents.resolution import (
    certify_all, certify_root, form_exponents, form_order, raw_epsilons, reduced_epsilons,
    resolution_multiplicities,
)


def test_multiplicities_4527():
    data = resolution_multiplicities(CharSeq(4, 5, 2, 7))
    assert (data.N1, data.N2) == (40, 94)
    assert (data.N11, data.N12, data.N13) == (8, 30, 42)
    assert (data.N21, data.N22, data.N23) == (46, 47, 1)


def test_multiplicities_self_intersection(grid):
    # N_j * (-E_j^2) is the sum over neighbours. With every alpha taken positive
    # a neighbour multiplicity may be shifted by N_j, so compare modulo N_j.
    for cs in grid:
        d = resolution_multiplicities(cs)
        assert (d.N21 + d.N22 + d.N23) % d.N2 == 0
        assert (d.N11 + d.N12 + d.N13) % d.N1 == 0


def test_certificate_yano_example():
    cs = CharSeq(2, 3, 2, 1)
    c = certify_root(cs, Fraction(5, 12))
    assert c.valid and c.divisor == 1 and c.form_exponents == (1, 1, 0)
    assert c.epsilons == (Fraction(1, 3), Fraction(1, 2), Fraction(1, 6))


def test_certificates_4527():
    cs = CharSeq(4, 5, 2, 7)
    certs = certify_all(cs)
    assert certs and all(c.valid for c in certs)
    with pytest.raises(NotInB11orB21):
        certify_root(cs, Fraction(11, 40))
    with pytest.raises(NotInB11orB21):
        certify_root(cs, Fraction(39, 94))


def test_raw_matches_reduced_and_order(grid):
    for cs in grid[::5]:
        data = resolution_multiplicities(cs)
        b11, _, b21, _ = split_sets(cs)
        for beta in sorted(set(b11) | set(b21)):
            divisor, exps = form_exponents(cs, beta)
            Nj = data.N1 if divisor == 1 else data.N2
            assert Fraction(form_order(cs, divisor, exps), Nj) == beta
            assert raw_epsilons(cs, divisor, exps, data) == reduced_epsilons(cs, divisor, exps)
