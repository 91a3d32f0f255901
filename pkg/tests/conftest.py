import math
from fractions import Fraction

import pytest

from saitoforms.mpoly import MPoly
from saitoforms.singularity import P1MirrorData, analyze


def var(name, variables):
    return MPoly.variable(name, variables)


def make_a(k):
    """A_k chain singularity z^(k+1), weights (1/(k+1),)."""
    f = var("z", ("z",)) ** (k + 1)
    return analyze(f, [Fraction(1, k + 1)])


def make_a_normalized(m):
    """z^(m+1)/(m+1): the normalization whose derivative is z^m."""
    f = var("z", ("z",)) ** (m + 1) * Fraction(1, m + 1)
    return analyze(f, [Fraction(1, m + 1)])


@pytest.fixture(scope="session")
def a2():
    return make_a(2)


@pytest.fixture(scope="session")
def e6_cusp():
    v = ("x", "y")
    return analyze(var("x", v) ** 3 + var("y", v) ** 4,
                   [Fraction(1, 3), Fraction(1, 4)])


@pytest.fixture(scope="session")
def e12():
    v = ("x", "y")
    return analyze(var("x", v) ** 3 + var("y", v) ** 7,
                   [Fraction(1, 3), Fraction(1, 7)])


@pytest.fixture(scope="session")
def e13():
    v = ("x", "y")
    return analyze(var("x", v) ** 3 + var("x", v) * var("y", v) ** 5,
                   [Fraction(1, 3), Fraction(2, 15)])


@pytest.fixture(scope="session")
def elliptic():
    """Simple elliptic cone point (z1^3 + z2^3 + z3^3)/3."""
    v = ("z1", "z2", "z3")
    f = (var("z1", v) ** 3 + var("z2", v) ** 3 + var("z3", v) ** 3) \
        * Fraction(1, 3)
    return analyze(f, [Fraction(1, 3)] * 3)


@pytest.fixture(scope="session")
def quartic_pair():
    """(x^4 + y^4)/4: one odd anti-diagonal gap, moduli dimension 1."""
    v = ("x", "y")
    f = (var("x", v) ** 4 + var("y", v) ** 4) * Fraction(1, 4)
    return analyze(f, [Fraction(1, 4), Fraction(1, 4)])


@pytest.fixture(scope="session")
def p1_q2():
    return P1MirrorData(2)


# --- series oracles for the simple elliptic family ---------------------

def elliptic_g(order):
    """1 + sum (-1)^r s^(3r) prod_{j<=r}(3j-2)^3 / (3r)!"""
    out = {0: Fraction(1)}
    for r in range(1, order // 3 + 1):
        num = Fraction((-1) ** r)
        for j in range(1, r + 1):
            num *= Fraction(3 * j - 2) ** 3
        out[3 * r] = num / math.factorial(3 * r)
    return out


def elliptic_h(order):
    """s + sum (-1)^r s^(3r+1) prod_{j<=r}(3j-1)^3 / (3r+1)!"""
    out = {1: Fraction(1)}
    for r in range(1, (order - 1) // 3 + 1):
        num = Fraction((-1) ** r)
        for j in range(1, r + 1):
            num *= Fraction(3 * j - 1) ** 3
        out[3 * r + 1] = num / math.factorial(3 * r + 1)
    return out


def series_reciprocal(series, order):
    a0 = series.get(0)
    inv = {0: 1 / a0}
    for k in range(1, order + 1):
        acc = sum(series.get(m, 0) * inv.get(k - m, 0)
                  for m in range(1, k + 1))
        inv[k] = -acc / a0
    return inv


def series_sub(a, b):
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) - c
    return {k: c for k, c in out.items() if c}
