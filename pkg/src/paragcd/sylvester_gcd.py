"""Parametric gcd from determinant-defined subresultants.

Every cell ``delta`` gets its subresultant ``R_delta`` straight from the
stacked coefficient matrix. The resulting table is read top to bottom: over a
parameter point the gcd is the ``R`` of the first case whose guard ``r`` does
not vanish there.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

from .polyring import ParamId, ParamPoly, XPoly
from .subres import DegreeVector, enumerate_cells, make_delta_index, subresultant

__all__ = ["GcdCase", "CaseTable", "Condition", "pgcd", "normalize_case", "substitute_table"]

#: One conjunct of a guard: (polynomial, True for "!= 0" / False for "== 0").
Condition = tuple[ParamPoly, bool]


@dataclass(frozen=True)
class GcdCase:
    delta: tuple[int, ...]
    r: ParamPoly
    R: XPoly
    # explicit conjunction; empty for order-based (first-match) tables
    conditions: tuple[Condition, ...] = ()


@dataclass(frozen=True)
class CaseTable:
    degrees: DegreeVector
    monic: bool
    cases: tuple[GcdCase, ...]
    algorithm: str = "sylvester"
    explicit: bool = field(default=False)

    def __len__(self) -> int:
        return len(self.cases)

    def __iter__(self):
        return iter(self.cases)

    def __getitem__(self, i: int) -> GcdCase:
        return self.cases[i]

    def max_param_degree(self) -> int:
        """Largest total parameter degree over all gcd-expression coefficients."""
        return max(c.R.max_param_degree() for c in self.cases)

    def guard(self, i: int) -> tuple[Condition, ...]:
        """The full conjunction selecting case ``i``.

        Order-based tables expand to ``r_1 = 0 and ... and r_(i-1) = 0 and
        r_i != 0``; the last case of such a table needs no ``!= 0`` conjunct
        but it is kept for uniformity.
        """
        case = self.cases[i]
        if self.explicit:
            return case.conditions
        conds = [(c.r, False) for c in self.cases[:i]]
        conds.append((case.r, True))
        return tuple(conds)

    def leading_params(self) -> list[ParamId]:
        """Parameters whose vanishing would drop an input degree."""
        return [
            ParamId(i, di)
            for i, di in enumerate(self.degrees)
            if not (self.monic and i == 0)
        ]


def normalize_case(case: GcdCase) -> GcdCase:
    """Strip the integer content of R (and rescale r to match)."""
    c = case.R.content()
    if c in (0, 1):
        return case
    R = case.R.exact_div_scalar(ParamPoly.constant(c))
    r = case.r.exact_div(ParamPoly.constant(c)) if case.r else case.r
    return replace(case, R=R, r=r)


def pgcd(d, normalize: bool = False) -> CaseTable:
    """Case table over all cells, each R_delta computed from its matrix."""
    d = d if isinstance(d, DegreeVector) else DegreeVector(tuple(d))
    cases = []
    for delta in enumerate_cells(d.d0, d.n):
        R, r = subresultant(make_delta_index(delta, d), d)
        case = GcdCase(delta, r, R)
        cases.append(normalize_case(case) if normalize else case)
    return CaseTable(d, False, tuple(cases), "sylvester")


def substitute_table(table: CaseTable, assignment: dict[ParamId, int],
                     monic: bool | None = None) -> CaseTable:
    """Apply an integer substitution to every r and R of a table."""
    cases = tuple(
        replace(
            c,
            r=c.r.substitute(assignment),
            R=c.R.substitute(assignment),
            conditions=tuple((p.substitute(assignment), nz) for p, nz in c.conditions),
        )
        for c in table.cases
    )
    return replace(table, cases=cases, monic=table.monic if monic is None else monic)


def cell_order(cases: Sequence[GcdCase]) -> list[tuple[int, ...]]:
    return [c.delta for c in cases]
