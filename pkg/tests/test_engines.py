from math import comb

import pytest

from conftest import a, pid
from paragcd.baseline_recursive import pgcd_poly_recursive, pgcd_recursive
from paragcd.errors import DegreeOrder, DivisionByZero, InexactDivision
from paragcd.habicht_gcd import epgcd, habicht_step
from paragcd.polyring import XPoly, formal_poly, xp_prem
from paragcd.subres import enumerate_cells, formal_system, subresultant_of, two_poly_subresultant
from paragcd.sylvester_gcd import pgcd, substitute_table


def test_pgcd_334_shape():
    table = pgcd((3, 3, 4))
    assert len(table) == 10
    assert [c.delta for c in table] == enumerate_cells(3, 2)
    assert table[-1].R == formal_poly(0, 3)
    assert table[0].R == subresultant_of((3, 0), (3, 3, 4))[0]


@pytest.mark.parametrize("d", [(1, 1, 1), (2, 2, 2), (2, 3, 3, 3), (1, 2, 2, 2, 2)])
def test_case_count(d):
    assert len(pgcd(d)) == comb(d[0] + len(d) - 1, len(d) - 1)


def test_n1_is_classical_chain():
    F = formal_system((3, 5))
    chain = [F[0]] + [two_poly_subresultant(k, *F)[0] for k in range(1, 4)]
    assert [c.R for c in pgcd((3, 5))] == chain[::-1]


def test_guard_expansion():
    table = pgcd((2, 2, 2))
    g = table.guard(2)
    assert [nz for _, nz in g] == [False, False, True]
    assert g[-1][0] == table[2].r


def test_normalize_strips_content():
    table = pgcd((2, 3, 3), normalize=True)
    assert all(c.R.content() == 1 for c in table)


def test_generalized_habicht_identity_monic():
    d = (3, 3, 4)
    R11 = subresultant_of((1, 1), d, monic=True)[0]
    R20 = subresultant_of((2, 0), d, monic=True)[0]
    R21 = subresultant_of((2, 1), d, monic=True)[0]
    r10 = subresultant_of((1, 0), d, monic=True)[1]
    assert xp_prem(R11, R20) == R21 * XPoly([r10])
    assert habicht_step(R11, R20, r10) == R21


def test_generalized_habicht_needs_monic():
    # without a03 = 1 the two sides differ by exactly a03
    d = (3, 3, 4)
    R11, R20, (R21, _), (_, r10) = (
        subresultant_of((1, 1), d)[0],
        subresultant_of((2, 0), d)[0],
        subresultant_of((2, 1), d),
        subresultant_of((1, 0), d),
    )
    assert xp_prem(R11, R20) == R21 * XPoly([r10 * a(0, 3)])


def test_habicht_step_errors():
    d = (3, 3, 4)
    R11 = subresultant_of((1, 1), d, monic=True)[0]
    R20 = subresultant_of((2, 0), d, monic=True)[0]
    with pytest.raises(InexactDivision):
        habicht_step(R11, R20, a(1, 2) + 1)
    with pytest.raises(DivisionByZero):
        habicht_step(R11, R20, XPoly().lc)
    with pytest.raises(DegreeOrder):
        habicht_step(R11, formal_poly(0, 3), a(1, 2))


@pytest.mark.parametrize("d", [(2, 2, 3), (3, 3, 4), (2, 2, 2, 2)])
def test_epgcd_equals_pgcd_with_monic_substitution(d):
    expected = substitute_table(pgcd(d), {pid(0, d[0]): 1}, monic=True)
    got = epgcd(d)
    assert [c.delta for c in got] == [c.delta for c in expected]
    for x, y in zip(got, expected):
        assert x.R == y.R and x.r == y.r


def test_epgcd_layers_read_only_previous_two():
    seen = []

    def trace(delta, deps):
        seen.append(delta)
        w = sum(delta)
        for dep in deps:
            assert dep in seen
            nz = [v for v in delta if v]
            if len(nz) == 1:
                assert sum(dep) in (w - 1, w - 2)
            else:
                assert sum(dep) < w

    table = epgcd((3, 3, 4), trace=trace)
    assert sorted(seen) == sorted(c.delta for c in table)
    weights = [sum(x) for x in seen]
    assert weights == sorted(weights)


def test_recursive_n1_equals_pgcd():
    A, B = pgcd_recursive((2, 3)), pgcd((2, 3))
    assert [(c.R, c.r) for c in A] == [(c.R, c.r) for c in B]


def test_recursive_leaves():
    table = pgcd_recursive((2, 2, 2))
    assert len(table) == 6
    assert sorted(c.delta for c in table) == sorted(enumerate_cells(2, 2))
    for c in table:
        # each level walks its chain from the top down to the chosen position
        expected, deg = 0, 2
        for k in c.delta:
            expected += deg - k + 1
            deg -= k
            if deg == 0:
                break
        assert len(c.conditions) == expected
        assert c.conditions[-1][1] is True


def test_recursive_constant_head_short_circuits():
    leaves = pgcd_poly_recursive(list(formal_system((2, 2, 2))))
    constant = [G for g, G, delta in leaves if delta[0] == 2]
    assert constant == [XPoly.constant(1)]


def test_recursive_344_degree(recursive_344):
    table, _ = recursive_344
    assert len(table) == 10
    assert table.max_param_degree() == 21
