"""Braid words in Artin generators, their action on the free group, and Burau matrices.

Letter ``k`` stands for sigma_k and ``-k`` for its inverse. Free-group words
use the same signed-integer encoding over alpha_1..alpha_n.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .exactalg import T, LaurentMatrix, LaurentPoly, ONE, ZERO


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def free_inverse(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n < 1:
            raise ValueError("braid group needs n >= 1 strands")
        for x in self.letters:
            if x == 0 or abs(x) > self.n - 1:
                raise ValueError(f"letter {x} is not a generator of B_{self.n}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ValueError("braids on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, free_inverse(self.letters))

    def reduced(self) -> "BraidWord":
        return BraidWord(self.n, free_reduce(self.letters))

    def reversed(self) -> "BraidWord":
        return BraidWord(self.n, tuple(reversed(self.letters)))

    def __str__(self) -> str:
        return word_to_string(self.letters)


def word_to_string(letters: Sequence[int]) -> str:
    """``[-2, 1, 1, 2]`` -> ``"s2^-1 s1^2 s2"``; the empty word is ``"1"``."""
    if not letters:
        return "1"
    parts = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        k = letters[i]
        e = (j - i) * (1 if k > 0 else -1)
        parts.append(f"s{abs(k)}" if e == 1 else f"s{abs(k)}^{e}")
        i = j
    return " ".join(parts)


_TOKEN = re.compile(r"s(\d+)(?:\^(-?\d+))?")


def parse_word(text: str, n: int) -> BraidWord:
    """Inverse of :func:`word_to_string`."""
    text = text.strip()
    if text in ("", "1"):
        return BraidWord(n)
    letters: list[int] = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise ValueError(f"bad braid token {tok!r}")
        k, e = int(m.group(1)), int(m.group(2) or 1)
        letters.extend([k if e > 0 else -k] * abs(e))
    return BraidWord(n, tuple(letters))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def _substitute(g: Sequence[int], images: dict[int, tuple[int, ...]]) -> tuple[int, ...]:
    out: list[int] = []
    for x in g:
        img = images.get(abs(x))
        if img is None:
            piece: Sequence[int] = (x,)
        else:
            piece = img if x > 0 else free_inverse(img)
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def _generator_images(k: int) -> dict[int, tuple[int, ...]]:
    i = abs(k)
    if k > 0:
        # sigma_i: a_i -> a_i a_{i+1} a_i^-1, a_{i+1} -> a_i
        return {i: (i, i + 1, -i), i + 1: (i,)}
    # inverse: a_i -> a_{i+1}, a_{i+1} -> a_{i+1}^-1 a_i a_{i+1}
    return {i: (i + 1,), i + 1: (-(i + 1), i, i + 1)}


def artin_action(w: BraidWord, g: Sequence[int]) -> tuple[int, ...]:
    """Apply the letters of ``w`` to the free word ``g`` one after another."""
    out = free_reduce(g)
    for k in w.letters:
        out = _substitute(out, _generator_images(k))
    return out


def artin_images(w: BraidWord) -> tuple[tuple[int, ...], ...]:
    return tuple(artin_action(w, (i,)) for i in range(1, w.n + 1))


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Equality in B_n, decided by the (faithful) Artin action."""
    if w1.n != w2.n:
        raise ValueError("braids on different strand counts")
    if free_reduce(w1.letters) == free_reduce(w2.letters):
        return True
    return artin_images(w1) == artin_images(w2)


def conjugate_of_generator(g: Sequence[int]) -> int | None:
    """If ``g`` is ``u a_j u^-1`` return ``j``, else ``None``."""
    g = free_reduce(g)
    if len(g) % 2 == 0:
        return None
    mid = len(g) // 2
    u = g[:mid]
    if g[mid] <= 0 or g[mid + 1:] != free_inverse(u):
        return None
    return g[mid]


def is_braid_automorphism(w: BraidWord) -> bool:
    """Each a_i maps to a conjugate of a generator (a permutation) and a_1...a_n is fixed."""
    images = artin_images(w)
    targets = [conjugate_of_generator(img) for img in images]
    if None in targets or sorted(targets) != list(range(1, w.n + 1)):
        return False
    rho = tuple(range(1, w.n + 1))
    return artin_action(w, rho) == rho


@lru_cache(maxsize=None)
def _generator_matrix(n: int, k: int) -> LaurentMatrix:
    """Reduced Burau image of sigma_|k| (or its inverse) as an (n-1)x(n-1) matrix."""
    d = n - 1
    i = abs(k)
    rows = [[ONE if r == c else ZERO for c in range(d)] for r in range(d)]
    if d == 1:
        rows[0][0] = -T
    else:
        r = i - 1
        rows[r][r] = -T
        if i > 1:
            rows[r][r - 1] = T
        if i < d:
            rows[r][r + 1] = ONE
    m = LaurentMatrix.from_rows(rows)
    if k > 0:
        return m
    return _invert_generator(m, i - 1)


def _invert_generator(m: LaurentMatrix, r: int) -> LaurentMatrix:
    # m differs from the identity only in row r, with -t on the diagonal
    d = m.rows
    rows = LaurentMatrix.identity(d).to_rows()
    tinv = LaurentPoly.monomial(-1)
    for c in range(d):
        if c == r:
            rows[r][c] = -tinv
        elif not m[r, c].is_zero():
            rows[r][c] = m[r, c] * tinv
    return LaurentMatrix.from_rows(rows)


def burau(w: BraidWord) -> LaurentMatrix:
    """Reduced Burau matrix, multiplied in word order (left to right)."""
    if w.n < 2:
        raise ValueError("reduced Burau needs n >= 2")
    out = LaurentMatrix.identity(w.n - 1)
    for k in w.letters:
        out = out * _generator_matrix(w.n, k)
    return out
