"""Cell indices and generalized subresultants of several polynomials.

A cell index ``delta = (delta_1, ..., delta_n)`` with ``|delta| <= d0`` says how
many shifted copies ``x^(delta_k - 1) F_k, ..., F_k`` of each ``F_k`` enter the
stacked coefficient matrix; the number of copies of ``F_0`` is derived from
the column count so that the ``F_0`` block is the widest one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Sequence

from .detmat import PolyMatrix, coefficient_matrix, determinant_polynomial
from .errors import BadIndex, BadWeight, InvalidDegrees, LengthMismatch
from .polyring import ParamPoly, XPoly, formal_poly

__all__ = [
    "DegreeVector",
    "DeltaIndex",
    "glex_compare",
    "glex_key",
    "enumerate_cells",
    "make_delta_index",
    "formal_system",
    "subres_matrix",
    "subresultant",
    "subresultant_of",
    "two_poly_subresultant",
]


@dataclass(frozen=True)
class DegreeVector:
    """Degrees ``(d0, d1, ..., dn)`` with ``d0`` the minimum and ``n >= 1``."""

    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(v) for v in self.d)
        object.__setattr__(self, "d", d)
        if len(d) < 2:
            raise InvalidDegrees("need at least two degrees (n >= 1)")
        if any(v < 1 for v in d):
            raise InvalidDegrees(f"all degrees must be >= 1, got {d}")
        if any(v < d[0] for v in d[1:]):
            raise InvalidDegrees(f"d0 must be the minimum degree, got {d}")

    @classmethod
    def parse(cls, text: str) -> "DegreeVector":
        try:
            vals = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
        except ValueError as exc:
            raise InvalidDegrees(f"cannot parse degrees {text!r}") from exc
        return cls(vals)

    @property
    def d0(self) -> int:
        return self.d[0]

    @property
    def n(self) -> int:
        return len(self.d) - 1

    def __iter__(self):
        return iter(self.d)

    def __len__(self) -> int:
        return len(self.d)

    def __getitem__(self, i: int) -> int:
        return self.d[i]

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.d)) + ")"


def _as_dv(d) -> DegreeVector:
    return d if isinstance(d, DegreeVector) else DegreeVector(tuple(d))


@dataclass(frozen=True)
class DeltaIndex:
    """A cell index with its derived F_0 copy count and column count."""

    delta: tuple[int, ...]
    delta0: int
    col_count: int

    @property
    def weight(self) -> int:
        return sum(self.delta)


def glex_key(delta: Sequence[int]) -> tuple:
    return (sum(delta), tuple(delta))


def glex_compare(delta: Sequence[int], gamma: Sequence[int]) -> int:
    """1 if delta > gamma in graded-lex order, 0 if equal, -1 if less."""
    if len(delta) != len(gamma):
        raise LengthMismatch(f"cannot compare {tuple(delta)} with {tuple(gamma)}")
    a, b = glex_key(delta), glex_key(gamma)
    return (a > b) - (a < b)


@lru_cache(maxsize=None)
def _cells(d0: int, n: int) -> tuple[tuple[int, ...], ...]:
    cells = [t for t in product(range(d0 + 1), repeat=n) if sum(t) <= d0]
    cells.sort(key=glex_key, reverse=True)
    return tuple(cells)


def enumerate_cells(d0: int, n: int) -> list[tuple[int, ...]]:
    """All delta in N^n with |delta| <= d0, strictly decreasing under glex."""
    if d0 < 1 or n < 1:
        raise ValueError("enumerate_cells needs d0 >= 1 and n >= 1")
    cells = list(_cells(d0, n))
    assert len(cells) == comb(d0 + n, n)
    return cells


def make_delta_index(delta: Sequence[int], d) -> DeltaIndex:
    d = _as_dv(d)
    delta = tuple(int(v) for v in delta)
    if len(delta) != d.n:
        raise LengthMismatch(f"delta has {len(delta)} entries, expected {d.n}")
    if any(v < 0 for v in delta):
        raise BadWeight(f"negative entry in {delta}")
    if sum(delta) > d.d0:
        raise BadWeight(f"|delta| = {sum(delta)} exceeds d0 = {d.d0}")
    active = [d[k + 1] + v for k, v in enumerate(delta) if v]
    if not active:
        # only F_0 itself: one row of d0 + 1 columns
        return DeltaIndex(delta, 1, d.d0 + 1)
    c = max(active)
    delta0 = c - d.d0 if c >= d.d0 else 1
    return DeltaIndex(delta, delta0, c)


def formal_system(d, monic: bool = False) -> tuple[XPoly, ...]:
    """The formal polynomials F_0, ..., F_n; ``monic`` fixes a[0][d0] = 1."""
    d = _as_dv(d)
    return tuple(formal_poly(i, di, monic=monic and i == 0) for i, di in enumerate(d))


def _stack(idx: DeltaIndex, polys: Sequence[XPoly]) -> list[XPoly]:
    counts = (idx.delta0,) + idx.delta
    rows = []
    for f, c in zip(polys, counts):
        rows.extend(f.shift(s) for s in range(c - 1, -1, -1))
    return rows


def subres_matrix(idx: DeltaIndex, d, monic: bool = False,
                  polys: Sequence[XPoly] | None = None) -> PolyMatrix:
    """cm(x^(delta0-1) F0, ..., F0, x^(delta1-1) F1, ..., Fn)."""
    d = _as_dv(d)
    if polys is None:
        polys = formal_system(d, monic)
    return coefficient_matrix(_stack(idx, polys))


def subresultant(idx: DeltaIndex, d, monic: bool = False,
                 polys: Sequence[XPoly] | None = None) -> tuple[XPoly, ParamPoly]:
    """(R_delta, r_delta); r is read at x^(d0 - |delta|) and may be zero."""
    d = _as_dv(d)
    R = determinant_polynomial(subres_matrix(idx, d, monic, polys))
    return R, R.coeff(d.d0 - idx.weight)


def subresultant_of(delta: Sequence[int], d, monic: bool = False) -> tuple[XPoly, ParamPoly]:
    """Shorthand: subresultant of the formal system at a raw delta tuple."""
    return subresultant(make_delta_index(delta, d), d, monic)


def two_poly_subresultant(k: int, f0: XPoly, f1: XPoly) -> tuple[XPoly, ParamPoly]:
    """k-subresultant of two polynomials with deg f0 <= deg f1, new indexing.

    ``R_k`` has formal degree ``d0 - k``. For ``k = 0`` the result is
    ``lc(f0)^max(d1 - d0 - 1, 0) * f0``.
    """
    d0, d1 = f0.degree, f1.degree
    if f0.is_zero or f1.is_zero:
        raise BadIndex("subresultant of a zero polynomial")
    if d0 > d1:
        raise BadIndex(f"need deg F0 <= deg F1, got {d0} > {d1}")
    if not 0 <= k <= d0:
        raise BadIndex(f"k = {k} outside 0..{d0}")
    if k == 0:
        R = f0 * (f0.lc ** max(d1 - d0 - 1, 0))
    else:
        rows = [f0.shift(s) for s in range(d1 - (d0 - k) - 1, -1, -1)]
        rows += [f1.shift(s) for s in range(k - 1, -1, -1)]
        R = determinant_polynomial(coefficient_matrix(rows))
    return R, R.coeff(d0 - k)
