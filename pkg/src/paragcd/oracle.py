"""Randomized end-to-end check of case tables against exact Euclidean gcds."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .errors import AllZero
from .polyring import ParamId, RationalUPoly, XPoly
from .subres import enumerate_cells, formal_system
from .sylvester_gcd import CaseTable, GcdCase

__all__ = [
    "RationalUPoly",
    "Failure",
    "VerificationReport",
    "euclid_gcd_many",
    "is_similar",
    "select_case",
    "verify_case_table",
    "mutate_table",
]

_ONE = XPoly.constant(1)


def euclid_gcd_many(polys: Sequence[RationalUPoly]) -> RationalUPoly:
    """Monic gcd of several rational polynomials by repeated Euclid."""
    g = RationalUPoly()
    for p in polys:
        a, b = g, p
        while not b.is_zero:
            a, b = b, a % b
        g = a
    if g.is_zero:
        raise AllZero("gcd of zero polynomials only")
    return g.monic()


def is_similar(p: RationalUPoly, q: RationalUPoly) -> bool:
    """True iff p = c*q for a nonzero rational c; two zeros are similar."""
    if p.is_zero or q.is_zero:
        return p.is_zero and q.is_zero
    return p.monic() == q.monic()


@dataclass
class Failure:
    assignment: dict[ParamId, int]
    expected: RationalUPoly
    delta: tuple[int, ...] | None
    selected: RationalUPoly | None


@dataclass
class VerificationReport:
    trials: int
    passes: int = 0
    failures: list[Failure] = field(default_factory=list)
    # trials where some R_delta was not divisible by the specialized gcd
    divisibility_failures: int = 0
    planted: int = 0
    # how often each cell was selected
    cell_hits: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.divisibility_failures

    def as_dict(self) -> dict:
        def up(p):
            return None if p is None else [str(c) for c in p.coeffs]

        return {
            "trials": self.trials,
            "passes": self.passes,
            "planted": self.planted,
            "divisibility_failures": self.divisibility_failures,
            "cell_hits": {",".join(map(str, k)): v for k, v in sorted(self.cell_hits.items())},
            "failures": [
                {
                    "assignment": {str(k): v for k, v in sorted(f.assignment.items())},
                    "expected": up(f.expected),
                    "delta": None if f.delta is None else list(f.delta),
                    "selected": up(f.selected),
                }
                for f in self.failures
            ],
        }


def select_case(table: CaseTable, assignment: dict[ParamId, int]) -> GcdCase | None:
    """First case whose guard holds at the point."""
    if table.explicit:
        for case in table.cases:
            if all(bool(p.evaluate(assignment)) == nz for p, nz in case.conditions):
                return case
        return None
    for case in table.cases:
        if case.r.evaluate(assignment):
            return case
    return None


def _params(table: CaseTable) -> list[ParamId]:
    return [
        ParamId(i, j)
        for i, di in enumerate(table.degrees)
        for j in range(di + 1)
        if not (table.monic and i == 0 and j == di)
    ]


def _rand_poly(rng: random.Random, deg: int, bound: int, monic: bool) -> RationalUPoly:
    coeffs = [rng.randint(-bound, bound) for _ in range(deg)]
    if monic:
        lead = 1
    else:
        lead = 0
        while not lead:
            lead = rng.randint(-bound, bound)
    return RationalUPoly(coeffs + [lead])


def _draw_plain(table: CaseTable, rng: random.Random, bound: int) -> dict[ParamId, int]:
    params = _params(table)
    leads = set(table.leading_params())
    while True:
        a = {p: rng.randint(-bound, bound) for p in params}
        if all(a[p] for p in leads):
            return a


def _draw_planted(table: CaseTable, rng: random.Random, bound: int) -> dict[ParamId, int]:
    """Parameters of a system whose partial gcds follow a random cell.

    For a random cell delta the prefix gcd degrees are
    ``D_k = d0 - (delta_1 + ... + delta_k)``; nested monic factors
    ``G_n | G_(n-1) | ... | G_1`` of those degrees are planted into the
    inputs so that ``gcd(F_0, ..., F_k)`` is divisible by ``G_k``.
    """
    d = table.degrees
    delta = rng.choice(enumerate_cells(d.d0, d.n))
    D = [d.d0]
    for v in delta:
        D.append(D[-1] - v)
    G = [None] * (d.n + 1)
    G[d.n] = _rand_poly(rng, D[d.n], bound, monic=True)
    for k in range(d.n - 1, 0, -1):
        G[k] = G[k + 1] * _rand_poly(rng, D[k] - D[k + 1], bound, monic=True)
    a = {}
    for i, di in enumerate(d):
        base = G[max(i, 1)]
        h = _rand_poly(rng, di - base.degree, bound, monic=table.monic and i == 0)
        f = base * h
        for j in range(di + 1):
            c = f.coeffs[j] if j < len(f.coeffs) else Fraction(0)
            a[ParamId(i, j)] = int(c)
    if table.monic:
        del a[ParamId(0, d.d0)]
    return a


def verify_case_table(table: CaseTable, trials: int, seed: int, bound: int,
                      planted_fraction: float = 0.5,
                      check_divisibility: bool = True) -> VerificationReport:
    """Specialize, select the first matching case, compare with Euclid.

    Deterministic in ``(table, trials, seed, bound, planted_fraction)``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if bound < 2:
        raise ValueError("bound must be >= 2")
    rng = random.Random(seed)
    F = formal_system(table.degrees, table.monic)
    report = VerificationReport(trials)
    n_planted = round(trials * planted_fraction)
    # the recursive baseline writes a literal 1 for constant branch heads;
    # that is a normalized answer, not an element of the ideal of F
    ideal_members = [
        c for c in table.cases if not (table.explicit and c.R == _ONE)
    ]
    for t in range(trials):
        if t < n_planted:
            a = _draw_planted(table, rng, bound)
            report.planted += 1
        else:
            a = _draw_plain(table, rng, bound)
        expected = euclid_gcd_many([f.specialize(a) for f in F])
        case = select_case(table, a)
        selected = None if case is None else case.R.specialize(a)
        if case is not None:
            report.cell_hits[case.delta] += 1
        if selected is not None and is_similar(selected, expected):
            report.passes += 1
        else:
            report.failures.append(
                Failure(a, expected, None if case is None else case.delta, selected)
            )
        if check_divisibility:
            for c in ideal_members:
                if not (c.R.specialize(a) % expected).is_zero:
                    report.divisibility_failures += 1
                    break
    return report


def mutate_table(table: CaseTable, index: int = 0) -> CaseTable:
    """Copy of the table with one gcd expression multiplied by x."""
    cases = list(table.cases)
    c = cases[index]
    cases[index] = replace(c, R=c.R.shift(1))
    return replace(table, cases=tuple(cases))


def specialize_system(table: CaseTable, a: dict[ParamId, int]) -> list[RationalUPoly]:
    return [f.specialize(a) for f in formal_system(table.degrees, table.monic)]

