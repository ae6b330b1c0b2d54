"""Walk diagram loops with an adaptive step and read off braid words.

At every step the strands y_1(x), ..., y_n(x) are ordered by real part. When
two neighbours at positions k, k+1 trade places the crossing is sigma_k if
the left strand has the smaller imaginary part, and sigma_k^-1 otherwise.
Equal real parts never count as a change.

The step is the largest of eps0, eps0/2, eps0/4, ... for which the disks
that bound each strand's motion over the step stay pairwise disjoint.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from . import numpoly
from .braid import BraidWord, free_reduce
from .curve import Curve, SingularFiber, singular_fibers
from .errors import StepUnderflow, StrandCollision
from .numpoly import derivative
from .rbd import Diagram, DiagramLoop, all_loops, build_diagram, cell_loop

log = logging.getLogger(__name__)

UNDERFLOW_FACTOR = 1e-12
COLLISION_TOL = 1e-13
EDGE_FRACTION = 1 / 16


@dataclass(frozen=True)
class StrandState:
    x: complex
    values: tuple[complex, ...]
    order: tuple[int, ...]


@dataclass(frozen=True)
class MonodromyResult:
    fiber: SingularFiber | None  # None for the loop around infinity
    loop: DiagramLoop
    word: BraidWord
    steps: int = 0

    @property
    def is_infinity(self) -> bool:
        return self.fiber is None


class _Strands:
    """Per-curve data reused at every step."""

    def __init__(self, c: Curve):
        self.n = c.n
        self.coeffs = [tuple(reversed(p.coeffs)) for p in c.components]
        self.abs_deriv = [tuple(abs(a) for a in derivative(p).coeffs) for p in c.components]

    def values(self, x: complex) -> list[complex]:
        out = []
        for cs in self.coeffs:
            acc = 0j
            for a in cs:
                acc = acc * x + a
            out.append(acc)
        return out

    def bounds(self, b: complex, eps: float, direction: complex) -> list[float]:
        r = max(abs(b), abs(b + eps * direction))
        out = []
        for ad in self.abs_deriv:
            acc = 0.0
            for a in reversed(ad):
                acc = acc * r + a
            out.append(eps * acc)
        return out

    def choose(self, b: complex, vals: Sequence[complex], eps0: float, direction: complex, floor: float) -> float:
        n = self.n
        seps = []
        for i in range(n):
            for j in range(i + 1, n):
                d = abs(vals[i] - vals[j])
                if d < COLLISION_TOL * max(1.0, abs(vals[i]), abs(vals[j])):
                    raise StrandCollision(f"strands {i + 1} and {j + 1} meet near x = {b}")
                seps.append((i, j, d))
        eps = eps0
        while True:
            bd = self.bounds(b, eps, direction)
            if all(bd[i] + bd[j] < d for i, j, d in seps):
                return eps
            eps /= 2
            if eps < floor:
                raise StepUnderflow(f"step size fell below {floor:.3g} near x = {b}")


def step_bound(c: Curve, b: complex, eps: float, direction: complex = 1) -> list[float]:
    """How far each strand can move while x goes from b to b + eps*direction."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return _Strands(c).bounds(complex(b), eps, complex(direction))


def strand_state(c: Curve, x: complex) -> StrandState:
    vals = tuple(_Strands(c).values(x))
    order = tuple(sorted(range(c.n), key=lambda k: vals[k].real))
    return StrandState(complex(x), vals, order)


def choose_step(c: Curve, state: StrandState, eps0: float, direction: complex = 1) -> float:
    return _Strands(c).choose(state.x, state.values, eps0, complex(direction), UNDERFLOW_FACTOR * eps0)


def default_eps0(loop: DiagramLoop) -> float:
    """A sixteenth of the shortest edge, ignoring edges that are rounding dust."""
    lengths = loop.edge_lengths()
    total = sum(lengths)
    return EDGE_FRACTION * min(L for L in lengths if L > 1e-9 * total)


def _adjacent_swap(old: Sequence[int], new: Sequence[int]) -> int | None:
    """Position k if ``new`` is ``old`` with entries k, k+1 exchanged."""
    diff = [p for p in range(len(old)) if old[p] != new[p]]
    if len(diff) == 2 and diff[1] == diff[0] + 1 and old[diff[0]] == new[diff[1]]:
        return diff[0]
    return None


def _bubble_letters(old: list[int], new: Sequence[int], vals: Sequence[complex]) -> list[int]:
    """Adjacent transpositions taking ``old`` to ``new``, lowest position first each pass."""
    target = {s: p for p, s in enumerate(new)}
    cur = list(old)
    letters = []
    changed = True
    while changed:
        changed = False
        for k in range(len(cur) - 1):
            if target[cur[k]] > target[cur[k + 1]]:
                a, b = cur[k], cur[k + 1]
                letters.append((k + 1) if vals[a].imag < vals[b].imag else -(k + 1))
                cur[k], cur[k + 1] = b, a
                changed = True
    return letters


def _sign(vals: Sequence[complex], left: int, right: int) -> bool:
    return vals[left].imag < vals[right].imag


def track_crossings(c: Curve, loop: DiagramLoop, eps0: float | None = None) -> tuple[list[int], int]:
    """Crossing letters in the order they occur along ``loop``, plus the step count."""
    strands = _Strands(c)
    if eps0 is None:
        eps0 = default_eps0(loop)
    floor = UNDERFLOW_FACTOR * eps0
    x = loop.vertices[0]
    vals = strands.values(x)
    order = sorted(range(c.n), key=lambda k: vals[k].real)
    letters: list[int] = []
    steps = 0
    for a, b in loop.edges():
        L = abs(b - a)
        if L == 0:
            continue
        direction = (b - a) / L
        x = a
        vals = strands.values(x)
        s = 0.0
        while s < L:
            remaining = L - s
            eps = strands.choose(x, vals, min(eps0, remaining), direction, floor)
            while True:
                last = eps >= remaining
                nx = b if last else x + eps * direction
                nvals = strands.values(nx)
                norder = sorted(order, key=lambda k: nvals[k].real)
                if norder == order:
                    break
                k = _adjacent_swap(order, norder)
                if k is not None:
                    left, right = order[k], order[k + 1]
                    pre = _sign(vals, left, right)
                    if pre == _sign(nvals, left, right) or eps / 2 < floor:
                        letters.append(k + 1 if pre else -(k + 1))
                        break
                elif eps / 2 < floor:
                    letters.extend(_bubble_letters(order, norder, vals))
                    break
                eps /= 2
            steps += 1
            x, vals, order = nx, nvals, norder
            s = L if last else s + eps
    return letters, steps


def track_loop(c: Curve, loop: DiagramLoop, eps0: float | None = None,
               fiber: SingularFiber | None = None) -> MonodromyResult:
    """Braid monodromy along ``loop``.

    Crossings are collected in travel order; the word is written in
    composition order (the automorphism applied first stands rightmost), so
    the crossing met first along the loop is the last letter.
    """
    letters, steps = track_crossings(c, loop, eps0)
    word = BraidWord(c.n, free_reduce(reversed(letters)))
    return MonodromyResult(fiber, loop, word, steps)


def global_monodromy(c: Curve, eps0: float | None = None,
                     tol: float = numpoly.DEFAULT_MERGE_TOL) -> list[MonodromyResult]:
    """Local monodromies of every finite singular fiber, then the one at infinity."""
    if c.n < 2:
        raise ValueError("monodromy needs at least two components")
    fibers = singular_fibers(c, tol)
    if not fibers:
        trivial = DiagramLoop((), None)
        return [MonodromyResult(None, trivial, BraidWord(c.n))]
    diagram = build_diagram([f.x for f in fibers])
    return monodromy_from_diagram(c, fibers, diagram, eps0)


def monodromy_from_diagram(c: Curve, fibers: Sequence[SingularFiber], diagram: Diagram,
                           eps0: float | None = None) -> list[MonodromyResult]:
    out = []
    for loop in all_loops(diagram):
        fiber = None if loop.is_infinity else fibers[loop.fiber_index]
        res = track_loop(c, loop, eps0, fiber)
        log.debug("loop %s: %s (%d steps)", loop.fiber_index, res.word, res.steps)
        out.append(res)
    return out


def local_monodromy(c: Curve, diagram: Diagram, fiber_index: int,
                    eps0: float | None = None) -> MonodromyResult:
    """Monodromy around one cell with strands labelled at the cell's top-right corner."""
    return track_loop(c, cell_loop(diagram, fiber_index), eps0)
