import random
from fractions import Fraction

from saitoforms.mpoly import MPoly
from saitoforms.residue_series import (
    higher_residue_Am, pairing_univariate, pairing_univariate_Am,
    pairing_univariate_p1,
)

from conftest import make_a_normalized


def test_closed_form_matches_pairing_with_one():
    for m in range(1, 5):
        for j in range(0, 10):
            closed = higher_residue_Am({j: Fraction(1)}, m, 8)
            paired = pairing_univariate_Am({j: Fraction(1)},
                                           {0: Fraction(1)}, m, 8)
            assert closed == paired


def test_leading_term_is_classical_residue():
    # t^0 coefficient of K(h, 1) equals the residue pairing with 1
    for m in (2, 3, 4):
        data = make_a_normalized(m)
        for j in range(0, 2 * m):
            series = higher_residue_Am({j: Fraction(1)}, m, 6)
            h = MPoly(("z",), {(j,): Fraction(1)})
            assert series.get(0, 0) == data.classical_residue(h)


def test_chain_pairing_sesquisymmetric():
    rng = random.Random(31)
    for _ in range(60):
        m = rng.randrange(1, 6)
        a = {rng.randrange(0, 9): Fraction(rng.randrange(-4, 5))}
        b = {rng.randrange(0, 9): Fraction(rng.randrange(-4, 5))}
        kab = pairing_univariate_Am(a, b, m, 8)
        kba = pairing_univariate_Am(b, a, m, 8)
        assert kab == {r: c * (-1) ** r for r, c in kba.items() if c}


def test_chain_degree_law():
    # nonzero t^r needs r = deg(a) + deg(b) - s with deg(z^j) = j/(m+1)
    for m in range(1, 6):
        s = Fraction(m - 1, m + 1)
        for i in range(0, 7):
            for j in range(0, 7):
                series = pairing_univariate_Am({i: Fraction(1)},
                                               {j: Fraction(1)}, m, 8)
                for r, c in series.items():
                    if c:
                        assert r == Fraction(i + j, m + 1) - s


def test_global_pairing_values():
    for q in (Fraction(1), Fraction(2), Fraction(-3)):
        one = {0: Fraction(1)}
        phi2 = {-1: q}
        inv = {-1: Fraction(1)}
        assert pairing_univariate_p1(one, one, q, 10) == {}
        assert pairing_univariate_p1(one, phi2, q, 10) == {0: Fraction(-1)}
        assert pairing_univariate_p1(inv, inv, q, 10) == {}


def test_global_pairing_sesquisymmetric():
    for q in (Fraction(2), Fraction(-3)):
        for i in range(-3, 4):
            for j in range(-3, 4):
                a = {i: Fraction(1)}
                b = {j: Fraction(1)}
                kab = pairing_univariate_p1(a, b, q, 8)
                kba = pairing_univariate_p1(b, a, q, 8)
                assert kab == {r: c * (-1) ** r for r, c in kba.items() if c}


def test_dispatcher_routes_both_models():
    a = {1: Fraction(1)}
    assert pairing_univariate(a, a, 6, m=3) == pairing_univariate_Am(a, a, 3, 6)
    assert pairing_univariate(a, a, 6, q=2) == \
        pairing_univariate_p1(a, a, Fraction(2), 6)
