"""Coefficient matrices and determinant polynomials over Z[a]."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import EmptyInput, NotSquare, TooTall, ZeroPolynomial
from .polyring import ParamPoly, XPoly

__all__ = [
    "PolyMatrix",
    "coefficient_matrix",
    "naive_det",
    "bareiss_det",
    "determinant_polynomial",
    "pcdp",
]

_ZERO = ParamPoly.constant(0)
_ONE = ParamPoly.constant(1)


class PolyMatrix:
    """Dense rectangular matrix of ParamPoly entries, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        ent = tuple(e if isinstance(e, ParamPoly) else ParamPoly.constant(e) for e in entries)
        if len(ent) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(ent)}")
        self.rows = rows
        self.cols = cols
        self.entries = ent

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        if not rows:
            raise EmptyInput("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, [e for r in rows for e in r])

    def __getitem__(self, ij: tuple[int, int]) -> ParamPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[ParamPoly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[ParamPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self, idx: Sequence[int]) -> "PolyMatrix":
        """Submatrix made of the given columns (0-based, in the given order)."""
        return PolyMatrix(
            self.rows, len(idx), [self[i, j] for i in range(self.rows) for j in idx]
        )

    def swap_rows(self, a: int, b: int) -> "PolyMatrix":
        rows = self.to_rows()
        rows[a], rows[b] = rows[b], rows[a]
        return PolyMatrix.from_rows(rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols})"


def coefficient_matrix(polys: Sequence[XPoly]) -> PolyMatrix:
    """Rows of descending coefficients, left-padded to the largest degree."""
    if not polys:
        raise EmptyInput("coefficient matrix of an empty list")
    if any(p.is_zero for p in polys):
        raise ZeroPolynomial("coefficient matrix row from the zero polynomial")
    m = max(p.degree for p in polys)
    entries = []
    for p in polys:
        d = p.dense()
        entries.extend([_ZERO] * (m - p.degree))
        entries.extend(reversed(d))
    return PolyMatrix(len(polys), m + 1, entries)


def naive_det(m: PolyMatrix) -> ParamPoly:
    """Laplace expansion along successive rows, memoized on column subsets."""
    if m.rows != m.cols:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    rows = m.to_rows()
    memo: dict[int, ParamPoly] = {}

    def minor(r: int, mask: int) -> ParamPoly:
        # det of rows r.. using the columns whose bit is clear in mask
        if r == n:
            return _ONE
        hit = memo.get(mask)
        if hit is not None:
            return hit
        total = _ZERO
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                continue
            e = rows[r][j]
            if not e.is_zero:
                sub = minor(r + 1, mask | 1 << j)
                if not sub.is_zero:
                    t = e * sub
                    total = total + t if sign > 0 else total - t
            sign = -sign
        memo[mask] = total
        return total

    return minor(0, 0)


def _eliminate(rows: list[list[ParamPoly]], steps: int):
    """Fraction-free elimination of the first ``steps`` columns in place.

    Returns the sign picked up by row swaps, or None when a pivot column is
    structurally zero below the diagonal.
    """
    p = len(rows)
    width = len(rows[0])
    sign = 1
    prev = _ONE
    for k in range(steps):
        piv = next((i for i in range(k, p) if not rows[i][k].is_zero), None)
        if piv is None:
            return None
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pk = rows[k]
        akk = pk[k]
        for i in range(k + 1, p):
            ri = rows[i]
            aik = ri[k]
            for j in range(k + 1, width):
                if aik.is_zero:
                    v = akk * ri[j]
                else:
                    v = akk * ri[j] - aik * pk[j]
                ri[j] = v.exact_div(prev) if not prev.is_one else v
            ri[k] = _ZERO
        prev = akk
    return sign


def bareiss_det(m: PolyMatrix) -> ParamPoly:
    """Determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    rows = m.to_rows()
    n = m.rows
    sign = _eliminate(rows, n - 1)
    if sign is None:
        return _ZERO
    d = rows[n - 1][n - 1]
    return d if sign > 0 else -d


def determinant_polynomial(m: PolyMatrix, method: str = "fast") -> XPoly:
    """dp(M) = sum_j c_j x^j, c_j = det of columns 1..p-1 and column q-j.

    ``method="fast"`` eliminates the shared leading p-1 columns once and reads
    every c_j off the last row; ``method="naive"`` takes each minor by
    cofactor expansion.
    """
    p, q = m.rows, m.cols
    if p > q:
        raise TooTall(f"determinant polynomial of a {p}x{q} matrix")
    if method == "naive":
        return _dp_naive(m)
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    rows = m.to_rows()
    sign = _eliminate(rows, p - 1)
    if sign is None:
        return _dp_naive(m)
    last = rows[p - 1]
    # coefficient of x^j sits in column q-1-j (0-based)
    coeffs = [last[q - 1 - j] for j in range(q - p + 1)]
    if sign < 0:
        coeffs = [-c for c in coeffs]
    return XPoly(coeffs)


def _dp_naive(m: PolyMatrix) -> XPoly:
    p, q = m.rows, m.cols
    lead = list(range(p - 1))
    return XPoly(naive_det(m.columns(lead + [q - 1 - j])) for j in range(q - p + 1))


def pcdp(m: PolyMatrix) -> ParamPoly:
    """Coefficient of dp(M) at x^(q-p); may be zero."""
    if m.rows > m.cols:
        raise TooTall(f"determinant polynomial of a {m.rows}x{m.cols} matrix")
    return determinant_polynomial(m).coeff(m.cols - m.rows)
