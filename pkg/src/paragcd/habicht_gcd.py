"""Parametric gcd through pseudo-remainder recursions (monic F_0).

With ``a[0][d0] = 1`` each subresultant of weight ``i`` follows from those of
weights ``i - 1`` and ``i - 2``:

* cells with two or more nonzero slots use the quadrilateral relation
  ``prem(R_(delta-e_p), R_(delta-e_q)) = r_(delta-e_p-e_q) * R_delta``;
* cells with a single nonzero slot ``k`` follow the two-polynomial chain of
  ``F_0`` and ``F_k``, starting from ``prem(F_k, F_0)``.

Every division is exact; an ``InexactDivision`` means the wiring is wrong.
"""

from __future__ import annotations

from typing import Callable

from .errors import DegreeOrder, DivisionByZero
from .polyring import ParamPoly, XPoly, xp_prem
from .subres import DegreeVector, enumerate_cells, formal_system, make_delta_index
from .sylvester_gcd import CaseTable, GcdCase, normalize_case

__all__ = ["habicht_step", "epgcd"]


def habicht_step(R_gamma: XPoly, R_eta: XPoly, r_zeta: ParamPoly) -> XPoly:
    """prem(R_gamma, R_eta) divided exactly by r_zeta."""
    if R_gamma.degree != R_eta.degree:
        raise DegreeOrder(
            f"operands must share a degree, got {R_gamma.degree} and {R_eta.degree}"
        )
    if R_gamma.degree < 1:
        raise DegreeOrder("operands must have degree >= 1")
    if r_zeta.is_zero:
        raise DivisionByZero("divisor r_zeta is the zero polynomial")
    return xp_prem(R_gamma, R_eta).exact_div_scalar(r_zeta)


def _minus(delta: tuple[int, ...], *slots: int) -> tuple[int, ...]:
    out = list(delta)
    for s in slots:
        out[s] -= 1
    return tuple(out)


def epgcd(d, normalize: bool = False,
          trace: Callable[[tuple, tuple], None] | None = None) -> CaseTable:
    """Case table for the monic system, layer by layer in |delta|.

    ``trace(delta, deps)`` is called for every computed cell with the cells
    it read from.
    """
    d = d if isinstance(d, DegreeVector) else DegreeVector(tuple(d))
    F = formal_system(d, monic=True)
    zero = (0,) * d.n
    R: dict[tuple, XPoly] = {zero: F[0]}
    r: dict[tuple, ParamPoly] = {zero: F[0].lc}
    if trace:
        trace(zero, ())

    cells = enumerate_cells(d.d0, d.n)
    for weight in range(1, d.d0 + 1):
        for delta in (c for c in cells if sum(c) == weight):
            nz = [k for k, v in enumerate(delta) if v]
            if len(nz) == 1:
                k = nz[0]
                if delta[k] == 1:
                    deps: tuple = ()
                    Rd = xp_prem(F[k + 1], F[0])
                else:
                    gamma = _minus(delta, k, k)
                    zeta = _minus(delta, k)
                    if delta[k] == 2:
                        power = make_delta_index(delta, d).delta0 - 1
                    else:
                        power = 2
                    deps = (gamma, zeta)
                    Rd = xp_prem(R[gamma], R[zeta])
                    if power:
                        Rd = Rd.exact_div_scalar(r[gamma] ** power)
            else:
                p, q = nz[0], nz[1]
                gamma, eta, zeta = _minus(delta, p), _minus(delta, q), _minus(delta, p, q)
                deps = (gamma, eta, zeta)
                Rd = habicht_step(R[gamma], R[eta], r[zeta])
            R[delta] = Rd
            r[delta] = Rd.coeff(d.d0 - weight)
            if trace:
                trace(delta, deps)

    cases = []
    for delta in cells:
        case = GcdCase(delta, r[delta], R[delta])
        cases.append(normalize_case(case) if normalize else case)
    return CaseTable(d, True, tuple(cases), "habicht")
