"""Completely reducible n-gonal curves: parsing, singular fibers, multiplicities.

Two textual forms are accepted::

    (y-x^2)(y-x-1)(y+1)          factored: each factor is y minus a component
    y1 = x^2; y2 = x + 1; y3 = -1

Coefficients are rationals (``3``, ``-1/2``, ``0.25``), imaginary literals
(``i``, ``2i``) or parenthesised Gaussian rationals (``(1/2-3i)``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import numpoly
from .errors import CurveSyntaxError, DuplicateComponent, NonReduced, NotAFiber
from .numpoly import ComplexPoly, RootCluster

# exact coefficient: (real, imaginary) as Fractions
GaussQ = tuple[Fraction, Fraction]
ExactPoly = tuple[GaussQ, ...]


def _exact_to_complex(p: ExactPoly) -> ComplexPoly:
    return ComplexPoly(complex(float(re), float(im)) for re, im in p)


def _trim(p: list[GaussQ]) -> ExactPoly:
    while p and p[-1] == (0, 0):
        p.pop()
    return tuple((Fraction(a), Fraction(b)) for a, b in p)


def exact_poly(coeffs) -> ExactPoly:
    """Exact polynomial from ints/Fractions/complex-with-rational-parts."""
    out: list[GaussQ] = []
    for c in coeffs:
        if isinstance(c, tuple):
            out.append((Fraction(c[0]), Fraction(c[1])))
        elif isinstance(c, complex):
            out.append((Fraction(c.real), Fraction(c.imag)))
        else:
            out.append((Fraction(c), Fraction(0)))
    return _trim(out)


def _format_exact(p: ExactPoly) -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        re, im = p[k]
        if re == 0 and im == 0:
            continue
        if im == 0:
            sign, mag = ("-" if re < 0 else "+"), str(abs(re))
        elif re == 0:
            sign, mag = ("-" if im < 0 else "+"), f"{abs(im)}i"
        else:
            sign, mag = "+", f"({re}{'+' if im > 0 else '-'}{abs(im)}i)"
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and mag == "1":
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = mag
        parts.append((sign, body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class Curve:
    components: tuple[ComplexPoly, ...]
    source_text: str = ""
    exact: tuple[ExactPoly, ...] | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.components)

    @classmethod
    def from_exact(cls, comps, source_text: str = "") -> "Curve":
        ex = tuple(exact_poly(c) for c in comps)
        if len(set(ex)) != len(ex):
            raise DuplicateComponent("curve has two identical components")
        if not ex:
            raise ValueError("curve needs at least one component")
        text = source_text or "".join(f"(y - ({_format_exact(p)}))" for p in ex)
        return cls(tuple(_exact_to_complex(p) for p in ex), text, ex)

    def describe(self) -> list[str]:
        if self.exact is not None:
            return [_format_exact(p) for p in self.exact]
        return [repr(p) for p in self.components]


@dataclass(frozen=True)
class SingularFiber:
    x: complex
    pairs: tuple[tuple[int, int, int], ...]  # (i, j, multiplicity), 0-based, i < j

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, _, m in self.pairs)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> CurveSyntaxError:
        return CurveSyntaxError(msg, self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def at_end(self) -> bool:
        return self.peek() == ""

    def number(self) -> Fraction:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isdigit() or self.text[self.pos] == "."):
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a number")
        num = Fraction(self.text[start:self.pos])
        if self.peek() == "/":
            self.pos += 1
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                raise self.error("expected a denominator")
            den = int(self.text[start:self.pos])
            if den == 0:
                raise self.error("zero denominator")
            num /= den
        return num

    def paren_complex(self) -> GaussQ:
        # "(" rational ("+"|"-") rational "i" ")", either part optional-signed
        self.expect("(")
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        re = sign * self.number()
        im = Fraction(0)
        if self.peek() == "i":
            self.pos += 1
            re, im = Fraction(0), re
        else:
            ch = self.peek()
            if ch not in ("+", "-"):
                raise self.error("expected '+' or '-' in complex literal")
            self.pos += 1
            s2 = -1 if ch == "-" else 1
            im = s2 * (self.number() if self.peek() != "i" else Fraction(1))
            self.expect("i")
        self.expect(")")
        return (re, im)

    def term(self) -> tuple[GaussQ, int]:
        """One monomial ``coef? (x (^ k)?)?``; returns (coefficient, degree)."""
        ch = self.peek()
        coef: GaussQ | None = None
        if ch.isdigit() or ch == ".":
            r = self.number()
            if self.peek() == "i":
                self.pos += 1
                coef = (Fraction(0), r)
            else:
                coef = (r, Fraction(0))
        elif ch == "i":
            self.pos += 1
            coef = (Fraction(0), Fraction(1))
        elif ch == "(":
            coef = self.paren_complex()
        if coef is not None and self.peek() == "*":
            self.pos += 1
            if self.peek() != "x":
                raise self.error("expected 'x' after '*'")
        deg = 0
        if self.peek() == "x":
            self.pos += 1
            deg = 1
            if self.peek() == "^":
                self.pos += 1
                self.skip()
                start = self.pos
                while self.pos < len(self.text) and self.text[self.pos].isdigit():
                    self.pos += 1
                if start == self.pos:
                    raise self.error("expected an exponent")
                deg = int(self.text[start:self.pos])
        elif coef is None:
            raise self.error("expected a term")
        coef = coef or (Fraction(1), Fraction(0))
        if deg and self.peek() == "/":  # x/3, x^2/2
            self.pos += 1
            den = self.number()
            if den == 0:
                raise self.error("zero denominator")
            coef = (coef[0] / den, coef[1] / den)
        return coef, deg

    def signed_terms(self, stop: str, first_signed: bool) -> dict[int, GaussQ]:
        acc: dict[int, GaussQ] = {}
        first = True
        while self.peek() not in (stop, ""):
            ch = self.peek()
            sign = 1
            if ch in "+-":
                self.pos += 1
                sign = -1 if ch == "-" else 1
            elif not first or first_signed:
                raise self.error("expected '+' or '-'")
            (re, im), deg = self.term()
            old = acc.get(deg, (Fraction(0), Fraction(0)))
            acc[deg] = (old[0] + sign * re, old[1] + sign * im)
            first = False
        return acc

    @staticmethod
    def to_poly(acc: dict[int, GaussQ], negate: bool) -> ExactPoly:
        if not acc:
            return ()
        s = -1 if negate else 1
        zero = (Fraction(0), Fraction(0))
        return _trim([(s * acc.get(k, zero)[0], s * acc.get(k, zero)[1]) for k in range(max(acc) + 1)])

    def factor(self) -> ExactPoly:
        self.expect("(")
        if self.peek() != "y":
            raise self.error("factor must start with 'y'")
        self.pos += 1
        acc = self.signed_terms(")", first_signed=True)
        self.expect(")")
        return self.to_poly(acc, negate=True)

    def assign(self) -> ExactPoly:
        if self.peek() != "y":
            raise self.error("expected 'y<index> ='")
        self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        self.expect("=")
        start = self.pos
        acc = self.signed_terms(";", first_signed=False)
        if not acc and self.pos == start:
            raise self.error("empty component")
        return self.to_poly(acc, negate=False)

    def curve(self) -> list[ExactPoly]:
        comps: list[ExactPoly] = []
        if self.peek() == "(":
            while not self.at_end():
                comps.append(self.factor())
        else:
            comps.append(self.assign())
            while self.peek() == ";":
                self.pos += 1
                if self.at_end():
                    break
                comps.append(self.assign())
            if not self.at_end():
                raise self.error("unexpected trailing input")
        if not comps:
            raise self.error("no components")
        return comps


def parse_curve(text: str) -> Curve:
    comps = _Parser(text).curve()
    seen: dict[ExactPoly, int] = {}
    for k, p in enumerate(comps):
        if p in seen:
            raise DuplicateComponent(f"components {seen[p] + 1} and {k + 1} are identical")
        seen[p] = k
    return Curve(tuple(_exact_to_complex(p) for p in comps), text.strip(), tuple(comps))


def _difference(c: Curve, i: int, j: int) -> ComplexPoly:
    if c.exact is not None:
        a, b = c.exact[i], c.exact[j]
        m = max(len(a), len(b))
        z = (Fraction(0), Fraction(0))
        diff = [
            ((a[k] if k < len(a) else z)[0] - (b[k] if k < len(b) else z)[0],
             (a[k] if k < len(a) else z)[1] - (b[k] if k < len(b) else z)[1])
            for k in range(m)
        ]
        return _exact_to_complex(_trim(diff))
    return c.components[i] - c.components[j]


def pair_roots(c: Curve, i: int, j: int, tol: float = numpoly.DEFAULT_MERGE_TOL) -> list[RootCluster]:
    """Root clusters of ``y_i - y_j`` (empty for a nonzero constant)."""
    d = _difference(c, i, j)
    if d.is_zero():
        raise NonReduced(f"components {i + 1} and {j + 1} coincide")
    if d.is_constant():
        return []
    return numpoly.roots(d, merge_tol=tol)


def singular_fibers(c: Curve, tol: float = numpoly.DEFAULT_MERGE_TOL) -> list[SingularFiber]:
    if c.n < 2:
        raise ValueError("singular fibers need at least two components")
    found: list[tuple[complex, list[tuple[int, int, int]], float]] = []
    for i in range(c.n):
        for j in range(i + 1, c.n):
            for cl in pair_roots(c, i, j, tol):
                for entry in found:
                    if abs(entry[0] - cl.location) <= max(tol * max(1.0, abs(cl.location)), cl.radius, entry[2]):
                        entry[1].append((i, j, cl.multiplicity))
                        break
                else:
                    found.append((cl.location, [(i, j, cl.multiplicity)], cl.radius))
    fibers = [SingularFiber(_snap(x), tuple(pairs)) for x, pairs, _ in found]
    fibers.sort(key=lambda f: numpoly.sort_key(f.x))
    return fibers


def _snap(z: complex, eps: float = 1e-13) -> complex:
    """Drop floating dust from components that should be zero."""
    s = max(1.0, abs(z))
    re = 0.0 if abs(z.real) < eps * s else z.real
    im = 0.0 if abs(z.imag) < eps * s else z.imag
    return complex(re, im)


def intersection_multiplicity(c: Curve, i: int, j: int, x0: complex, tol: float = 1e-6) -> int:
    if i > j:
        i, j = j, i
    for cl in pair_roots(c, i, j):
        if abs(cl.location - x0) <= max(tol * max(1.0, abs(x0)), cl.radius):
            return cl.multiplicity
    raise NotAFiber(f"{x0} is not a root of y_{i + 1} - y_{j + 1}")
