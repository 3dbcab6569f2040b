from fractions import Fraction

import pytest

from paragcd.errors import AllZero
from paragcd.habicht_gcd import epgcd
from paragcd.oracle import euclid_gcd_many, is_similar, mutate_table, select_case, verify_case_table
from paragcd.polyring import RationalUPoly
from paragcd.sylvester_gcd import pgcd


def P(*coeffs):
    # ascending coefficients
    return RationalUPoly(coeffs)


def test_euclid_examples():
    assert euclid_gcd_many([P(-1, 0, 1), P(-1, 0, 0, 1)]) == P(-1, 1)
    assert euclid_gcd_many([P(2, 4), P()]) == P(Fraction(1, 2), 1)
    assert euclid_gcd_many([P(5), P(1, 1)]) == P(1)
    with pytest.raises(AllZero):
        euclid_gcd_many([P(), P()])


def test_similarity():
    assert is_similar(P(2, 2), P(1, 1))
    assert not is_similar(P(1, 1), P(2, 1))
    assert is_similar(P(), P())
    assert not is_similar(P(), P(1))


def test_verify_pgcd_222():
    report = verify_case_table(pgcd((2, 2, 2)), 200, seed=7, bound=20)
    assert report.passes == 200 and report.ok
    assert report.planted == 100
    assert report.divisibility_failures == 0


def test_planted_trials_reach_degenerate_cells():
    report = verify_case_table(epgcd((3, 3, 4)), 200, seed=42, bound=20)
    assert report.ok
    # generic draws always land on the first cell; planting must reach others
    assert len(report.cell_hits) > 3
    assert sum(report.cell_hits.values()) == 200


def test_verify_is_deterministic():
    t = pgcd((2, 2, 3))
    r1 = verify_case_table(t, 40, seed=3, bound=9)
    r2 = verify_case_table(t, 40, seed=3, bound=9)
    assert r1.as_dict() == r2.as_dict()


def test_mutation_is_caught():
    t = pgcd((2, 2, 2))
    report = verify_case_table(mutate_table(t), 100, seed=1, bound=20)
    assert report.failures and not report.ok


def test_mutating_a_rare_case_is_caught_by_planting():
    t = pgcd((2, 2, 2))
    report = verify_case_table(mutate_table(t, index=4), 200, seed=1, bound=20)
    assert not report.ok


def test_selected_case_always_exists():
    t = pgcd((2, 3, 3))
    report = verify_case_table(t, 100, seed=11, bound=3)
    assert all(f.delta is not None for f in report.failures)
    assert report.ok


def test_select_case_first_match():
    t = pgcd((1, 1))
    from paragcd.polyring import ParamId

    point = {ParamId(0, 1): 1, ParamId(0, 0): 2, ParamId(1, 1): 2, ParamId(1, 0): 4}
    # resultant vanishes, so the gcd is F0 itself
    assert select_case(t, point).delta == (0,)


def test_bad_arguments():
    with pytest.raises(ValueError):
        verify_case_table(pgcd((1, 1)), 0, seed=0, bound=5)
    with pytest.raises(ValueError):
        verify_case_table(pgcd((1, 1)), 5, seed=0, bound=1)
