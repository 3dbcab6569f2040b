"""Folk-lore recursive parametric gcd, kept as the comparison baseline.

The two-polynomial subresultant chain of ``(F_0, F_1)`` splits parameter space
by the degree ``i`` of ``gcd(F_0, F_1)``; each branch then recurses on
``(R_(d0-i), F_2, ..., F_n)``. Coefficients at depth two and beyond are
polynomials in determinants, so their parameter degrees grow quickly. No
content is removed along the way.
"""

from __future__ import annotations

from typing import Sequence

from .polyring import XPoly
from .subres import DegreeVector, formal_system, two_poly_subresultant
from .sylvester_gcd import CaseTable, Condition, GcdCase, normalize_case

__all__ = ["pgcd_poly_recursive", "pgcd_recursive"]

_ONE = XPoly.constant(1)


def pgcd_poly_recursive(
    F: Sequence[XPoly],
) -> list[tuple[tuple[Condition, ...], XPoly, tuple[int, ...]]]:
    """Leaves ``(guard conjunction, gcd expression, cell index)`` in branch order.

    The cell index records the chain position taken at every level, so leaf
    ``(k_1, ..., k_n)`` corresponds to the generalized cell ``delta`` with
    ``delta_j = k_j``.
    """
    if len(F) < 2:
        raise ValueError("need at least two polynomials")
    f0, f1 = F[0], F[1]
    d0 = f0.degree
    chain = [two_poly_subresultant(k, f0, f1) for k in range(d0 + 1)]
    tail = len(F) - 2
    out = []
    for i in range(d0 + 1):
        k = d0 - i
        guard = tuple((chain[j][1], False) for j in range(d0, k, -1))
        guard += ((chain[k][1], True),)
        head = chain[k][0]
        if tail == 0:
            out.append((guard, head, (k,)))
        elif i == 0:
            # constant gcd of the first two: the whole system has gcd 1
            out.append((guard, _ONE, (k,) + (0,) * tail))
        else:
            for sub_guard, G, sub_delta in pgcd_poly_recursive([head, *F[2:]]):
                out.append((guard + sub_guard, G, (k,) + sub_delta))
    return out


def pgcd_recursive(d, normalize: bool = False) -> CaseTable:
    """Case table with explicit conjunctive guards, one leaf per cell."""
    d = d if isinstance(d, DegreeVector) else DegreeVector(tuple(d))
    cases = []
    for guard, G, delta in pgcd_poly_recursive(formal_system(d)):
        case = GcdCase(delta, guard[-1][0], G, guard)
        cases.append(normalize_case(case) if normalize else case)
    return CaseTable(d, False, tuple(cases), "recursive", explicit=True)
