"""Exact arithmetic in Z[a] and in Z[a][x].

``ParamPoly`` is a sparse polynomial in the coefficient parameters ``a[i][j]``
with arbitrary-precision integer coefficients. ``XPoly`` is a univariate
polynomial in ``x`` whose coefficients are ``ParamPoly`` values.

Monomials in the parameters are packed into a single Python integer: the
parameter ``a[i][j]`` owns a 16-bit field at a position given by the Cantor
pairing of ``(i, j)``. Multiplying monomials is then integer addition, and
comparing packed integers is a lexicographic monomial order, which is what
the division routine needs. The top bit of every field is kept clear so that
divisibility can be tested with a single guarded subtraction.
"""

from __future__ import annotations

import heapq
import math
import operator
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from .errors import (
    DegreeOrder,
    DivisionByZero,
    InexactDivision,
    MissingAssignment,
    ZeroDivisor,
)

__all__ = [
    "ParamId",
    "ParamPoly",
    "XPoly",
    "RationalUPoly",
    "ZERO_DEGREE",
    "formal_poly",
    "pp_mul",
    "pp_exact_div",
    "pp_content",
    "xp_prem",
    "xp_specialize",
]

_FIELD = 16
_FMASK = (1 << _FIELD) - 1
_MAX_EXP = (1 << (_FIELD - 1)) - 1

#: Degree of the zero XPoly. Compares below every integer degree.
ZERO_DEGREE = float("-inf")


class ParamId(NamedTuple):
    """The indeterminate ``a[poly_index][coeff_index]``."""

    poly_index: int
    coeff_index: int

    def __str__(self) -> str:
        return f"a[{self.poly_index}][{self.coeff_index}]"


def _slot(pid: ParamId) -> int:
    i, j = pid
    if i < 0 or j < 0:
        raise ValueError(f"parameter indices must be nonnegative, got {pid!r}")
    w = i + j
    return w * (w + 1) // 2 + j


@lru_cache(maxsize=None)
def _unslot(k: int) -> ParamId:
    w = (math.isqrt(8 * k + 1) - 1) // 2
    j = k - w * (w + 1) // 2
    return ParamId(w - j, j)


_guards: list[int] = [0]


def _guard(nfields: int) -> int:
    while len(_guards) <= nfields:
        f = len(_guards) - 1
        _guards.append(_guards[-1] | (1 << (f * _FIELD + _FIELD - 1)))
    return _guards[nfields]


def _mono_div(m: int, n: int) -> int | None:
    """Return m/n for packed monomials, or None if n does not divide m."""
    if n > m:
        return None
    g = _guard((m.bit_length() + _FIELD - 1) // _FIELD)
    diff = (m | g) - n
    if diff & g != g:
        return None
    return diff ^ g


@lru_cache(maxsize=1 << 18)
def _unpack(m: int) -> tuple[tuple[int, int], ...]:
    """Packed monomial -> ((slot, exponent), ...) with ascending slots."""
    out = []
    k = 0
    while m:
        e = m & _FMASK
        if e:
            out.append((k, e))
        m >>= _FIELD
        k += 1
    return tuple(out)


def _pack(exps: Iterable[tuple[ParamId, int]]) -> int:
    m = 0
    for pid, e in exps:
        if e < 0:
            raise ValueError("negative exponent")
        m += e << (_FIELD * _slot(ParamId(*pid)))
    _check_overflow(m)
    return m


def _check_overflow(m: int) -> None:
    if m & _guard((m.bit_length() + _FIELD - 1) // _FIELD):
        raise OverflowError(f"parameter exponent exceeds {_MAX_EXP}")


@lru_cache(maxsize=1 << 18)
def _mono_key(m: int):
    # descending ParamId inside the monomial; graded first
    parts = sorted(((_unslot(k), e) for k, e in _unpack(m)), reverse=True)
    return (sum(e for _, e in parts), tuple(parts))



Number = Union[int, Fraction]


class ParamPoly:
    """Immutable sparse polynomial over Z in the parameters ``a[i][j]``."""

    __slots__ = ("_t", "_hash", "_compiled")

    def __init__(self, terms: Mapping[int, int] | None = None):
        # internal: packed monomial -> nonzero int, already normalized
        self._t: dict[int, int] = dict(terms) if terms else {}
        self._hash: int | None = None
        self._compiled = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "ParamPoly":
        p = object.__new__(cls)
        p._t = terms
        p._hash = None
        p._compiled = None
        return p

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "ParamPoly":
        return cls._raw({0: int(c)} if c else {})

    @classmethod
    def param(cls, i: int, j: int, exp: int = 1) -> "ParamPoly":
        return cls._raw({_pack([(ParamId(i, j), exp)]): 1})

    @classmethod
    def from_terms(
        cls, terms: Iterable[tuple[Iterable[tuple[ParamId, int]], int]]
    ) -> "ParamPoly":
        """Build from ``[(((i, j), e), ...), c), ...]``; like terms are merged."""
        out: dict[int, int] = {}
        for exps, c in terms:
            m = _pack(exps)
            out[m] = out.get(m, 0) + int(c)
        return cls._raw({m: c for m, c in out.items() if c})

    # -- inspection -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    @property
    def is_one(self) -> bool:
        return len(self._t) == 1 and self._t.get(0) == 1

    def __len__(self) -> int:
        return len(self._t)

    def terms(self) -> list[tuple[tuple[tuple[ParamId, int], ...], int]]:
        """Terms in canonical (descending graded-lex) order."""
        ms = sorted(self._t, key=_mono_key, reverse=True)
        return [(_mono_key(m)[1], self._t[m]) for m in ms]

    def params(self) -> set[ParamId]:
        s: set[ParamId] = set()
        for m in self._t:
            s.update(_unslot(k) for k, _ in _unpack(m))
        return s

    def total_degree(self) -> int:
        """Maximum total degree over all terms; -1 for the zero polynomial."""
        if not self._t:
            return -1
        return max(_mono_key(m)[0] for m in self._t)

    def constant_value(self) -> int | None:
        """The integer value if this polynomial is constant, else None."""
        if not self._t:
            return 0
        if len(self._t) == 1 and 0 in self._t:
            return self._t[0]
        return None

    def content(self) -> int:
        return reduce(math.gcd, self._t.values(), 0)

    # -- ring operations ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ParamPoly.constant(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __neg__(self) -> "ParamPoly":
        return ParamPoly._raw({m: -c for m, c in self._t.items()})

    def __add__(self, other) -> "ParamPoly":
        if isinstance(other, int):
            other = ParamPoly.constant(other)
        elif not isinstance(other, ParamPoly):
            return NotImplemented
        if len(self._t) < len(other._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return ParamPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "ParamPoly":
        if isinstance(other, int):
            other = ParamPoly.constant(other)
        elif not isinstance(other, ParamPoly):
            return NotImplemented
        out = dict(self._t)
        for m, c in other._t.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = s
            else:
                del out[m]
        return ParamPoly._raw(out)

    def __rsub__(self, other) -> "ParamPoly":
        return (-self) + other

    def __mul__(self, other) -> "ParamPoly":
        if isinstance(other, int):
            if not other:
                return ParamPoly._raw({})
            return ParamPoly._raw({m: c * other for m, c in self._t.items()})
        if not isinstance(other, ParamPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ParamPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            if mb == 0:
                return ParamPoly._raw({m: c * cb for m, c in a.items()})
            out = {m + mb: c * cb for m, c in a.items()}
            _check_overflow(reduce(operator.or_, out))
            return ParamPoly._raw(out)
        out: dict[int, int] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                out[m] = get(m, 0) + ca * cb
        _check_overflow(reduce(operator.or_, out))
        return ParamPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "ParamPoly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ParamPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, other: "ParamPoly | int") -> "ParamPoly":
        """Return Q with Q*other == self, raising InexactDivision otherwise."""
        if isinstance(other, int):
            other = ParamPoly.constant(other)
        b = other._t
        if not b:
            raise DivisionByZero("division of a parameter polynomial by zero")
        a = self._t
        if not a:
            return ParamPoly._raw({})
        if len(b) == 1:
            (mb, cb), = b.items()
            out = {}
            for m, c in a.items():
                q, r = divmod(c, cb)
                mq = _mono_div(m, mb) if mb else m
                if r or mq is None:
                    raise InexactDivision(f"{self} is not divisible by {other}")
                out[mq] = q
            return ParamPoly._raw(out)

        lm_b = max(b)
        lc_b = b[lm_b]
        rest_b = [(m, c) for m, c in b.items() if m != lm_b]
        rem = dict(a)
        heap = [-m for m in rem]
        heapq.heapify(heap)
        quo: dict[int, int] = {}
        while heap:
            m = -heapq.heappop(heap)
            c = rem.pop(m, 0)
            if not c:
                continue
            # drop duplicate heap entries for the same monomial
            while heap and -heap[0] == m:
                heapq.heappop(heap)
            mq = _mono_div(m, lm_b)
            q, r = divmod(c, lc_b)
            if mq is None or r:
                raise InexactDivision(f"{self} is not divisible by {other}")
            quo[mq] = q
            for mb, cb in rest_b:
                mm = mq + mb
                v = rem.get(mm, 0) - q * cb
                if v:
                    if mm not in rem:
                        heapq.heappush(heap, -mm)
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return ParamPoly._raw(quo)

    # -- evaluation -----------------------------------------------------

    def _compile(self):
        if self._compiled is None:
            body = [(c, _unpack(m)) for m, c in self._t.items()]
            used = {k for _, mono in body for k, _ in mono}
            self._compiled = (body, used)
        return self._compiled

    def evaluate(self, assignment: Mapping[ParamId, Number]) -> Number:
        """Exact value at a point; every occurring parameter must be assigned."""
        body, used = self._compile()
        vals = {_slot(ParamId(*p)): v for p, v in assignment.items()}
        missing = used.difference(vals)
        if missing:
            raise MissingAssignment(f"no value for {_unslot(min(missing))}")
        total = 0
        for c, mono in body:
            t = c
            for k, e in mono:
                t *= vals[k] ** e if e > 1 else vals[k]
            total += t
        return total

    def substitute(self, assignment: Mapping[ParamId, int]) -> "ParamPoly":
        """Replace some parameters by integers, keeping the others symbolic."""
        sub = {_slot(ParamId(*p)): int(v) for p, v in assignment.items()}
        out: dict[int, int] = {}
        for m, c in self._t.items():
            rest = m
            for k, e in _unpack(m):
                if k in sub:
                    c *= sub[k] ** e
                    rest -= e << (_FIELD * k)
                    if not c:
                        break
            if c:
                out[rest] = out.get(rest, 0) + c
        return ParamPoly._raw({m: c for m, c in out.items() if c})

    # -- text -----------------------------------------------------------

    def __str__(self) -> str:
        return format_terms((0, exps, c) for exps, c in self.terms())

    def __repr__(self) -> str:
        return f"ParamPoly({str(self)!r})"


def format_terms(terms: Iterable[tuple[int, tuple, int]]) -> str:
    """Canonical text: ``c*a[i][j]^e*...*x^k`` joined by `` + ``."""
    parts = []
    for k, exps, c in terms:
        factors = [str(c)]
        factors += [f"{pid}^{e}" for pid, e in exps]
        if k:
            factors.append(f"x^{k}")
        parts.append("*".join(factors))
    return " + ".join(parts) if parts else "0"


def pp_mul(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    return a * b


def pp_exact_div(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    return a.exact_div(b)


def pp_content(a: ParamPoly) -> int:
    return a.content()


_ZERO = ParamPoly.constant(0)
_ONE = ParamPoly.constant(1)


def _as_pp(c) -> ParamPoly:
    if isinstance(c, ParamPoly):
        return c
    if isinstance(c, int):
        return ParamPoly.constant(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class XPoly:
    """Immutable univariate polynomial in x over Z[a].

    Coefficients are stored densely in ascending powers of x with trailing
    zeros stripped; ``coeffs`` exposes the sparse exponent -> coefficient view.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = [_as_pp(v) for v in coeffs]
        while c and c[-1].is_zero:
            c.pop()
        self._c: tuple[ParamPoly, ...] = tuple(c)
        self._hash = None

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, ParamPoly]) -> "XPoly":
        if not coeffs:
            return cls()
        top = max(coeffs)
        return cls(coeffs.get(k, _ZERO) for k in range(top + 1))

    @classmethod
    def constant(cls, c) -> "XPoly":
        return cls([c])

    @property
    def coeffs(self) -> dict[int, ParamPoly]:
        return {k: c for k, c in enumerate(self._c) if not c.is_zero}

    def dense(self) -> tuple[ParamPoly, ...]:
        """Ascending coefficient tuple, zeros included."""
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def lc(self) -> ParamPoly:
        return self._c[-1] if self._c else _ZERO

    def coeff(self, k: int) -> ParamPoly:
        return self._c[k] if 0 <= k < len(self._c) else _ZERO

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __neg__(self) -> "XPoly":
        return XPoly(-c for c in self._c)

    def __add__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        n = max(len(self._c), len(other._c))
        return XPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "XPoly") -> "XPoly":
        if not isinstance(other, XPoly):
            return NotImplemented
        n = max(len(self._c), len(other._c))
        return XPoly(self.coeff(k) - other.coeff(k) for k in range(n))

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, (int, ParamPoly)):
            other = _as_pp(other)
            return XPoly(c * other for c in self._c)
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self._c or not other._c:
            return XPoly()
        out = [_ZERO] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a.is_zero:
                continue
            for j, b in enumerate(other._c):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "XPoly":
        """Multiply by x**k."""
        if not self._c or k == 0:
            return self
        return XPoly((_ZERO,) * k + self._c)

    def exact_div_scalar(self, d: ParamPoly) -> "XPoly":
        """Divide every coefficient exactly by d."""
        d = _as_pp(d)
        if d.is_one:
            return self
        return XPoly(c.exact_div(d) for c in self._c)

    def map_coeffs(self, fn) -> "XPoly":
        return XPoly(fn(c) for c in self._c)

    def substitute(self, assignment: Mapping[ParamId, int]) -> "XPoly":
        return XPoly(c.substitute(assignment) for c in self._c)

    def content(self) -> int:
        return reduce(math.gcd, (c.content() for c in self._c), 0)

    def max_param_degree(self) -> int:
        """Largest total parameter degree among the coefficients (-1 if zero)."""
        return max((c.total_degree() for c in self._c), default=-1)

    def prem(self, other: "XPoly") -> "XPoly":
        return xp_prem(self, other)

    def specialize(self, assignment: Mapping[ParamId, Number]) -> "RationalUPoly":
        return xp_specialize(self, assignment)

    def terms(self) -> Iterator[tuple[int, tuple, int]]:
        """(x-power, parameter exponents, integer coefficient), canonical order."""
        for k in range(len(self._c) - 1, -1, -1):
            for exps, c in self._c[k].terms():
                yield k, exps, c

    def __str__(self) -> str:
        return format_terms(self.terms())

    def __repr__(self) -> str:
        return f"XPoly({str(self)!r})"


def formal_poly(i: int, degree: int, monic: bool = False) -> XPoly:
    """``F_i = sum_j a[i][j] x^j`` with indeterminate coefficients.

    With ``monic`` the leading coefficient is the integer 1 instead of
    ``a[i][degree]``.
    """
    coeffs = [ParamPoly.param(i, j) for j in range(degree + 1)]
    if monic:
        coeffs[degree] = _ONE
    return XPoly(coeffs)


def xp_prem(a: XPoly, b: XPoly) -> XPoly:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over Z[a]."""
    if b.is_zero:
        raise ZeroDivisor("pseudo-division by the zero polynomial")
    m, n = a.degree, b.degree
    if m < n:
        raise DegreeOrder(f"prem needs deg A >= deg B, got {m} < {n}")
    bc = b.dense()
    lcb = bc[-1]
    monic = lcb.is_one
    r = list(a.dense())
    e = m - n + 1
    while r and len(r) - 1 >= n:
        top = len(r) - 1
        lcr = r[top]
        s = top - n
        if not monic:
            r = [c * lcb for c in r]
        r.pop()
        for t in range(n):
            if not bc[t].is_zero:
                r[s + t] = r[s + t] - lcr * bc[t]
        while r and r[-1].is_zero:
            r.pop()
        e -= 1
    if e and not monic and r:
        f = lcb ** e
        r = [c * f for c in r]
    return XPoly(r)


class RationalUPoly:
    """Univariate polynomial over Q, coefficients ascending in x."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [Fraction(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "RationalUPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return RationalUPoly(c / lc for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalUPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __mul__(self, other: "RationalUPoly") -> "RationalUPoly":
        if isinstance(other, (int, Fraction)):
            return RationalUPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RationalUPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalUPoly(out)

    def divmod(self, other: "RationalUPoly") -> tuple["RationalUPoly", "RationalUPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        n = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        q = [Fraction(0)] * max(len(r) - n, 0)
        while len(r) - 1 >= n and r:
            s = len(r) - 1 - n
            f = r[-1] / lc
            q[s] = f
            for t in range(n + 1):
                r[s + t] -= f * other.coeffs[t]
            r.pop()
            while r and not r[-1]:
                r.pop()
        return RationalUPoly(q), RationalUPoly(r)

    def __mod__(self, other: "RationalUPoly") -> "RationalUPoly":
        return self.divmod(other)[1]

    def __repr__(self) -> str:
        return f"RationalUPoly({[str(c) for c in self.coeffs]})"


def xp_specialize(a: XPoly, assignment: Mapping[ParamId, Number]) -> RationalUPoly:
    """Substitute rationals for all parameters of ``a``."""
    return RationalUPoly(c.evaluate(assignment) for c in a.dense())
