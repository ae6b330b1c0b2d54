"""Alexander polynomial of the curve complement from its global braid monodromy.

The Libgober matrix stacks ``burau(m_i) - I`` for every local monodromy
(infinity included). The gcd of its maximal minors equals the Alexander
polynomial times ``1 + t + ... + t^(n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import numpoly
from .braid import BraidWord, burau
from .curve import Curve
from .errors import NotDivisible
from .exactalg import (
    LaurentMatrix,
    LaurentPoly,
    cyclotomic_display,
    div_exact,
    minors_gcd,
    normalize,
)
from .tracker import MonodromyResult, global_monodromy


def libgober_matrix(words: Sequence[BraidWord]) -> LaurentMatrix:
    if not words:
        raise ValueError("need at least one braid word")
    n = words[0].n
    if any(w.n != n for w in words):
        raise ValueError("braid words on different strand counts")
    ident = LaurentMatrix.identity(n - 1)
    out = burau(words[0]) - ident
    for w in words[1:]:
        out = out.vstack(burau(w) - ident)
    return out


def geometric_sum(n: int) -> LaurentPoly:
    """``1 + t + ... + t^(n-1)``."""
    return LaurentPoly([1] * n)


@dataclass(frozen=True)
class AlexanderResult:
    polynomial: LaurentPoly
    minors_gcd: LaurentPoly
    monodromies: tuple[MonodromyResult, ...]

    @property
    def display(self) -> str:
        return cyclotomic_display(self.polynomial)


def alexander_from_words(words: Sequence[BraidWord]) -> tuple[LaurentPoly, LaurentPoly]:
    """(normalized Alexander polynomial, gcd of maximal minors)."""
    n = words[0].n
    g = minors_gcd(libgober_matrix(words), n - 1)
    if g.is_zero():
        return g, g
    try:
        poly = div_exact(g, geometric_sum(n))
    except NotDivisible:
        raise NotDivisible(
            f"gcd of minors {g} is not divisible by 1 + t + ... + t^{n - 1}; "
            "the monodromy is inconsistent"
        ) from None
    return normalize(poly), g


def alexander_details(c: Curve, eps0: float | None = None,
                      tol: float = numpoly.DEFAULT_MERGE_TOL) -> AlexanderResult:
    results = global_monodromy(c, eps0, tol)
    poly, g = alexander_from_words([r.word for r in results])
    return AlexanderResult(poly, g, tuple(results))


def alexander_polynomial(c: Curve, eps0: float | None = None,
                         tol: float = numpoly.DEFAULT_MERGE_TOL) -> LaurentPoly:
    return alexander_details(c, eps0, tol).polynomial
