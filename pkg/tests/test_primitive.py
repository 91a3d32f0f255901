from fractions import Fraction

from saitoforms.mpoly import MPoly
from saitoforms.primitive import (
    primitive_form, verify_class_equal, verify_primitive,
)
from saitoforms.singularity import analyze
from saitoforms.unfolding import build_unfolding

from conftest import (
    elliptic_g, elliptic_h, make_a, series_reciprocal, series_sub,
)


def _series_of(elem):
    return {e[0]: c for e, c in elem.terms.items() if c}


def test_chain_points_trivial_form():
    for k in (2, 3):
        data = make_a(k)
        unf = build_unfolding(data, 4)
        pf = primitive_form(unf)
        recs = pf.records()
        assert len(recs) == 1
        q, j, elem = recs[0]
        assert (q, j) == (0, 1) and elem == unf.ring_one()
        assert verify_primitive(unf, MPoly.constant(data.f.variables, 1))


def test_elliptic_socle_family_reciprocal(elliptic):
    N = 7
    unf = build_unfolding(elliptic, N, mask=[8])
    pf = primitive_form(unf)
    assert all((q, j) == (0, 1) for q, j, _ in pf.records())
    oracle = series_reciprocal(elliptic_g(N), N)
    comp = _series_of(pf.blocks[0][0])
    assert all(comp.get(k, 0) == oracle.get(k, 0) for k in range(N + 1))
    assert verify_primitive(unf, pf)


def test_elliptic_socle_family_nontrivial_splitting(elliptic):
    N = 7
    unf = build_unfolding(elliptic, N, mask=[8])
    c = {(8, 1): Fraction(1)}
    pf = primitive_form(unf, c=c)
    oracle = series_reciprocal(series_sub(elliptic_g(N), elliptic_h(N)), N)
    comp = _series_of(pf.blocks[0][0])
    assert all(comp.get(k, 0) == oracle.get(k, 0) for k in range(N + 1))
    assert verify_primitive(unf, pf, c=c)


def test_constant_representative_degrades(e12):
    # zeta_+ = 1 holds through second order but fails at third
    one = MPoly.constant(e12.f.variables, 1)
    unf2 = build_unfolding(e12, 2)
    assert verify_primitive(unf2, one)
    unf3 = build_unfolding(e12, 3)
    report = verify_primitive(unf3, one)
    assert not report
    assert report.mismatches


def test_truncation_stability(elliptic):
    # the degree-M slice of the order-N form equals the order-M form
    unf_hi = build_unfolding(elliptic, 6, mask=[8])
    unf_lo = build_unfolding(elliptic, 4, mask=[8])
    pf_hi = primitive_form(unf_hi)
    pf_lo = primitive_form(unf_lo)
    for (q_hi, j_hi, e_hi), (q_lo, j_lo, e_lo) in zip(
            pf_hi.records(), pf_lo.records()):
        assert (q_hi, j_hi) == (q_lo, j_lo)
        assert e_hi.truncate(4) == e_lo


def test_verify_class_equal_detects_difference(elliptic):
    unf = build_unfolding(elliptic, 5, mask=[8])
    pf = primitive_form(unf)
    assert verify_class_equal(unf, pf, pf)
    one = MPoly.constant(elliptic.f.variables, 1)
    assert not verify_class_equal(unf, pf, one)


def test_quartic_pair_with_splitting_parameter(quartic_pair):
    unf = build_unfolding(quartic_pair, 4, mask=[9])
    for c in (None, {(9, 1): Fraction(2)}):
        pf = primitive_form(unf, c=c)
        assert verify_primitive(unf, pf, c=c)
