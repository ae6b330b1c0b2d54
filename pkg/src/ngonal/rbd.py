"""Rectangular braid diagrams and the loops they induce in the x-plane.

Grid lines run through midpoints between consecutive distinct real (resp.
imaginary) parts of the singular fibers, plus one boundary line a unit
beyond the extremes on each side. Every fiber then sits alone in a cell,
and loops are walked along grid lines only, so they never touch a fiber.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .numpoly import sort_key

DEFAULT_DEDUP_TOL = 1e-6

Rect = tuple[float, float, float, float]  # xmin, xmax, ymin, ymax


def _dedup(values: Sequence[float], tol: float) -> list[float]:
    out: list[float] = []
    for v in sorted(values):
        if out and v - out[-1] < tol:
            continue
        out.append(v)
    return out


def _grid(values: list[float]) -> list[float]:
    # conjugate pairs put a midline at 0 up to rounding; make it exact
    mids = [(a + b) / 2 for a, b in zip(values, values[1:])]
    mids = [0.0 if abs(m) < 1e-12 * max(1.0, abs(a), abs(b)) else m
            for m, a, b in zip(mids, values, values[1:])]
    return [values[0] - 1.0] + mids + [values[-1] + 1.0]


def _locate(v: float, distinct: list[float]) -> int:
    return min(range(len(distinct)), key=lambda k: abs(v - distinct[k]))


@dataclass(frozen=True)
class Diagram:
    fibers: tuple[complex, ...]
    vertical_lines: tuple[float, ...]
    horizontal_lines: tuple[float, ...]
    base_point: complex
    cells: tuple[Rect, ...]  # one per fiber, same order as ``fibers``

    def bounding_rect(self) -> Rect:
        """Smallest rectangle containing every occupied cell."""
        return (
            min(c[0] for c in self.cells),
            max(c[1] for c in self.cells),
            min(c[2] for c in self.cells),
            max(c[3] for c in self.cells),
        )


@dataclass(frozen=True)
class DiagramLoop:
    vertices: tuple[complex, ...]
    fiber_index: int | None  # None marks the loop around infinity

    @property
    def is_infinity(self) -> bool:
        return self.fiber_index is None

    def edges(self) -> list[tuple[complex, complex]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def edge_lengths(self) -> list[float]:
        return [abs(b - a) for a, b in self.edges()]


def build_diagram(fibers: Sequence[complex], dedup_tol: float = DEFAULT_DEDUP_TOL) -> Diagram:
    if not fibers:
        raise ValueError("a braid diagram needs at least one finite fiber")
    fibers = tuple(complex(f) for f in fibers)
    re = _dedup([f.real for f in fibers], dedup_tol)
    im = _dedup([f.imag for f in fibers], dedup_tol)
    vlines, hlines = _grid(re), _grid(im)
    cells = []
    for f in fibers:
        i = _locate(f.real, re)
        j = _locate(f.imag, im)
        cells.append((vlines[i], vlines[i + 1], hlines[j], hlines[j + 1]))
    return Diagram(fibers, tuple(vlines), tuple(hlines), complex(vlines[-1], 0.0), tuple(cells))


def _simplify(points: list[complex]) -> tuple[complex, ...]:
    """Drop repeated vertices and merge consecutive collinear axis-aligned legs.

    Merging A->B->C into A->C is a homotopy even when the leg doubles back,
    because the whole grid line is free of fibers.
    """
    out: list[complex] = []
    for p in points:
        if out and p == out[-1]:
            continue
        if len(out) >= 2:
            a, b = out[-2], out[-1]
            if (a.real == b.real == p.real) or (a.imag == b.imag == p.imag):
                out[-1] = p
                if p == out[-2]:
                    out.pop()
                continue
        out.append(p)
    return tuple(out)


def _rect_loop(base: complex, rect: Rect) -> list[complex]:
    xmin, xmax, ymin, ymax = rect
    x0 = base.real
    approach = [base, complex(x0, ymax), complex(xmax, ymax)]
    around = [complex(xmin, ymax), complex(xmin, ymin), complex(xmax, ymin), complex(xmax, ymax)]
    return approach + around + approach[::-1][1:]


def loop_for(d: Diagram, fiber_index: int) -> DiagramLoop:
    """Counterclockwise loop around one cell, approached via the top edge."""
    verts = _simplify(_rect_loop(d.base_point, d.cells[fiber_index]))
    return DiagramLoop(verts, fiber_index)


def cell_loop(d: Diagram, fiber_index: int) -> DiagramLoop:
    """The bare cell boundary, counterclockwise from its top-right corner.

    Its monodromy is the local one, free of the conjugation picked up on the
    way from the base point.
    """
    xmin, xmax, ymin, ymax = d.cells[fiber_index]
    corner = complex(xmax, ymax)
    verts = (corner, complex(xmin, ymax), complex(xmin, ymin), complex(xmax, ymin), corner)
    return DiagramLoop(verts, fiber_index)


def loop_infinity(d: Diagram) -> DiagramLoop:
    verts = _simplify(_rect_loop(d.base_point, d.bounding_rect()))
    return DiagramLoop(verts, None)


def all_loops(d: Diagram) -> list[DiagramLoop]:
    """Finite loops in left-to-right, bottom-to-top fiber order, infinity last."""
    order = sorted(range(len(d.fibers)), key=lambda k: sort_key(d.fibers[k]))
    return [loop_for(d, k) for k in order] + [loop_infinity(d)]


def winding_number(vertices: Sequence[complex], z: complex) -> int:
    """Winding number of a closed polyline about ``z``.

    A straight segment subtends an angle of magnitude < pi at any point off
    it, so the per-segment phase of ``(b - z) / (a - z)`` sums exactly.
    """
    total = sum(cmath.phase((b - z) / (a - z)) for a, b in zip(vertices, vertices[1:]))
    return round(total / (2 * math.pi))


def distance_to_loop(vertices: Sequence[complex], z: complex) -> float:
    best = math.inf
    for a, b in zip(vertices, vertices[1:]):
        ab = b - a
        L2 = abs(ab) ** 2
        s = 0.0 if L2 == 0 else max(0.0, min(1.0, ((z - a) * ab.conjugate()).real / L2))
        best = min(best, abs(a + s * ab - z))
    return best
