"""Exact Laurent polynomials in ``t`` over the rationals and matrices of them."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import NotDivisible, NotSquare

Number = Union[int, Fraction]


class LaurentPoly:
    """``sum(coeffs[j] * t**(min_deg + j))`` with canonical trimming.

    Instances are immutable and hashable.
    """

    __slots__ = ("min_deg", "coeffs")

    def __init__(self, coeffs: Iterable[Number] = (), min_deg: int = 0):
        cs = [Fraction(c) for c in coeffs]
        lo, hi = 0, len(cs)
        while lo < hi and cs[lo] == 0:
            lo += 1
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_deg", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_deg", min_deg + lo)
            object.__setattr__(self, "coeffs", tuple(cs[lo:hi]))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def const(cls, c: Number) -> "LaurentPoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "LaurentPoly":
        return cls([c], k)

    @classmethod
    def from_dict(cls, terms: dict[int, Number]) -> "LaurentPoly":
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    @property
    def max_deg(self) -> int:
        return self.min_deg + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def terms(self) -> dict[int, Fraction]:
        return {self.min_deg + j: c for j, c in enumerate(self.coeffs) if c}

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.max_deg, other.max_deg)
        out = [Fraction(0)] * (hi - lo + 1)
        for j, c in enumerate(self.coeffs):
            out[self.min_deg - lo + j] += c
        for j, c in enumerate(other.coeffs):
            out[other.min_deg - lo + j] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.min_deg)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(out, self.min_deg + other.min_deg)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials are invertible")
            c = self.coeffs[0]
            return LaurentPoly.monomial(self.min_deg * k, c**k)
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_deg == other.min_deg and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.min_deg, self.coeffs))

    def __call__(self, t):
        return sum(c * t ** (self.min_deg + j) for j, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"LaurentPoly({[str(c) for c in self.coeffs]}, min_deg={self.min_deg})"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: LaurentPoly, var: str = "t") -> str:
    """Human form, highest degree first, e.g. ``t^2 - 2*t + 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.max_deg, p.min_deg - 1, -1):
        c = p.coeffs[k - p.min_deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


T = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def neg(a: LaurentPoly) -> LaurentPoly:
    return -a


# -- ordinary integer polynomials (lowest degree first) used by gcd/division --

def _to_int_poly(p: LaurentPoly) -> list[int]:
    """Primitive integer multiple of ``p`` shifted so the constant term is nonzero."""
    den = reduce(math.lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    g = reduce(math.gcd, ints, 0)
    return [x // g for x in ints]


def _primitive(a: list[int]) -> list[int]:
    g = reduce(math.gcd, a, 0)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b``, made primitive."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for j, y in enumerate(b):
            a[shift + j] -= la * y
        while a and a[-1] == 0:
            a.pop()
        if a:
            a = _primitive(a)
    return a


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _int_prem(a, b)
    return a


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Canonical associate: ``min_deg == 0``, coprime integer coefficients, positive lead."""
    if p.is_zero():
        return p
    return LaurentPoly(_primitive(_to_int_poly(p)))


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.is_zero():
        return normalize(b)
    if b.is_zero():
        return normalize(a)
    return LaurentPoly(_primitive(_int_gcd(_to_int_poly(a), _to_int_poly(b))))


def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] / lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return q, a[:db]


def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """``q`` with ``a == q * b``; raises ``NotDivisible`` otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if a.is_zero():
        return a
    q, r = _poly_divmod(a.coeffs, b.coeffs)
    if any(r):
        raise NotDivisible(f"{b} does not divide {a}")
    return LaurentPoly(q, a.min_deg - b.min_deg)


def divides(b: LaurentPoly, a: LaurentPoly) -> bool:
    try:
        div_exact(a, b)
    except NotDivisible:
        return False
    return True


class LaurentMatrix:
    """Dense row-major matrix of ``LaurentPoly`` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[LaurentPoly | Number]):
        entries = tuple(e if isinstance(e, LaurentPoly) else LaurentPoly.const(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[LaurentPoly | Number]]) -> "LaurentMatrix":
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, [e for row in rows for e in row])

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "LaurentMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._same_shape(other)
        return LaurentMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._same_shape(other)
        return LaurentMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    if not r[k].is_zero():
                        b = other.entries[k * other.cols + j]
                        if not b.is_zero():
                            acc = acc + r[k] * b
                out.append(acc)
        return LaurentMatrix(self.rows, other.cols, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def _same_shape(self, other: "LaurentMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def vstack(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return LaurentMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int] | None = None) -> "LaurentMatrix":
        cols = range(self.cols) if cols is None else cols
        return LaurentMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"LaurentMatrix[{body}]"


def det(m: LaurentMatrix) -> LaurentPoly:
    """Exact determinant (Bareiss fraction-free elimination beyond 3x3)."""
    if m.rows != m.cols:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return ONE
    if n == 1:
        return m.entries[0]
    if n == 2:
        a, b, c, d = m.entries
        return a * d - b * c
    if n == 3:
        a, b, c, d, e, f, g, h, i = m.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    a = m.to_rows()
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = div_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def minors_gcd(m: LaurentMatrix, d: int) -> LaurentPoly:
    """Normalized gcd of all ``d x d`` minors of an ``N x d`` matrix.

    Zero rows never contribute a nonzero minor and are dropped first; the
    scan stops as soon as the running gcd is a unit.
    """
    if m.cols != d or m.rows < d:
        raise ValueError(f"need an N x {d} matrix with N >= {d}")
    live = [i for i in range(m.rows) if any(not e.is_zero() for e in m.row(i))]
    g = ZERO
    for rows in itertools.combinations(live, d):
        minor = det(m.submatrix(rows))
        if minor.is_zero():
            continue
        g = gcd(g, minor)
        if g.is_monomial():
            return ONE
    return g


def cyclotomic_display(p: LaurentPoly) -> str:
    """Display of ``normalize(p)`` as a product of ``t^k - 1`` / ``t^k + 1`` factors.

    Purely cosmetic; whatever does not split off this way is shown as one
    leftover factor.
    """
    p = normalize(p)
    if p.is_zero():
        return "0"
    factors: list[tuple[str, int]] = []
    rest = p
    k = rest.max_deg
    while k >= 1 and rest.max_deg >= 1:
        found = False
        for sign in (-1, 1):
            cand = LaurentPoly.monomial(k) + sign
            if k > rest.max_deg:
                continue
            if divides(cand, rest):
                rest = div_exact(rest, cand)
                label = "t" if k == 1 else f"t^{k}"
                label += " - 1" if sign < 0 else " + 1"
                if factors and factors[-1][0] == label:
                    factors[-1] = (label, factors[-1][1] + 1)
                else:
                    factors.append((label, 1))
                found = True
                break
        if not found:
            k -= 1
    # (label, exponent, degree); the leftover factor slots in by degree
    parts = [(label.replace(" ", ""), e, int(label.split("^")[1].split()[0]) if "^" in label else 1)
             for label, e in factors]
    if rest != ONE:
        parts.append((format_poly(rest).replace(" ", ""), 1, rest.max_deg))
    parts.sort(key=lambda f: -f[2])
    out = "".join(f"({label})" + (f"^{e}" if e > 1 else "") for label, e, _ in parts)
    return out or "1"
