from fractions import Fraction

from saitoforms.moduli import (
    AUTO_VANISHING, FREE, admissible_pairs, dimension_D, moduli_report,
    y_constraints,
)

from conftest import make_a


def test_chain_points_rigid():
    for k in range(2, 7):
        assert dimension_D(make_a(k)) == 0


def test_exceptional_unimodal_rigid(e12, e13):
    assert dimension_D(e12) == 0
    assert dimension_D(e13) == 0


def test_elliptic_one_dimensional(elliptic):
    assert dimension_D(elliptic) == 1
    cons = y_constraints(elliptic)
    frees = [c for c in cons if c.status == FREE]
    assert len(frees) == 1
    assert frees[0].pair == (8, 1) and frees[0].r == 1


def test_quartic_pair_one_dimensional(quartic_pair):
    assert dimension_D(quartic_pair) == 1
    frees = [c for c in y_constraints(quartic_pair) if c.status == FREE]
    assert [c.pair for c in frees] == [(9, 1)]


def test_admissible_pairs_integer_gap(elliptic):
    d = elliptic.degrees
    for i, j in admissible_pairs(elliptic):
        r = d[i - 1] - d[j - 1]
        assert r == int(r) and r > 0


def test_dimension_matches_pair_count(elliptic, quartic_pair, e12):
    # D counts below-anti-diagonal integer gaps plus odd gaps on it
    for data in (elliptic, quartic_pair, e12):
        mu = data.mu
        d = data.degrees
        count = 0
        for i in range(1, mu + 1):
            for j in range(1, mu + 1):
                r = d[i - 1] - d[j - 1]
                if not (r > 0 and r == int(r)):
                    continue
                if i + j < mu + 1:
                    count += 1
                elif i + j == mu + 1 and int(r) % 2 == 1:
                    count += 1
        assert dimension_D(data) == count


def test_report_counts_consistent(elliptic, quartic_pair):
    for data in (elliptic, quartic_pair):
        rep = moduli_report(data)
        counts = rep.counts()
        assert counts.get(FREE, 0) == rep.dimension
        assert sum(counts.values()) == len(rep.constraints)
        for c in rep.constraints:
            if c.status == AUTO_VANISHING:
                assert c.note
