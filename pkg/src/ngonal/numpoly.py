"""Dense univariate polynomials with complex floating coefficients.

Root finding is an Aberth-Ehrlich simultaneous iteration; multiple roots are
recovered by clustering the approximations with Weierstrass inclusion disks
rather than by deflation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import NoConvergence

DEFAULT_TOL = 1e-10
DEFAULT_MERGE_TOL = 1e-7

_EPS = np.finfo(float).eps


def _strip(coeffs: Iterable[complex]) -> tuple[complex, ...]:
    out = [complex(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class ComplexPoly:
    """Polynomial ``sum(coeffs[j] * x**j)``; the empty tuple is zero."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Iterable[complex] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: complex = 1) -> "ComplexPoly":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __call__(self, x: complex) -> complex:
        return eval_poly(self, x)

    def __add__(self, other: "ComplexPoly") -> "ComplexPoly":
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return ComplexPoly(
            (a[j] if j < len(a) else 0) + (b[j] if j < len(b) else 0) for j in range(m)
        )

    def __neg__(self) -> "ComplexPoly":
        return ComplexPoly(-c for c in self.coeffs)

    def __sub__(self, other: "ComplexPoly") -> "ComplexPoly":
        return self + (-other)

    def __mul__(self, other: "ComplexPoly") -> "ComplexPoly":
        if self.is_zero() or other.is_zero():
            return ComplexPoly()
        out = [0j] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ComplexPoly(out)

    def scale(self) -> float:
        """Largest coefficient magnitude (0 for the zero polynomial)."""
        return max((abs(c) for c in self.coeffs), default=0.0)

    def __repr__(self) -> str:
        return f"ComplexPoly({list(self.coeffs)!r})"


@dataclass(frozen=True)
class RootCluster:
    location: complex
    multiplicity: int
    radius: float


def eval_poly(p: ComplexPoly, x: complex) -> complex:
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def derivative(p: ComplexPoly) -> ComplexPoly:
    return ComplexPoly(j * p.coeffs[j] for j in range(1, len(p.coeffs)))


def _aberth(coeffs: np.ndarray, z: np.ndarray, max_iter: int) -> tuple[np.ndarray, bool]:
    """Run Aberth-Ehrlich steps on ``z``; ``coeffs`` are monic, highest degree first."""
    d = len(z)
    dcoeffs = np.polyder(coeffs)
    converged = np.zeros(d, dtype=bool)
    for _ in range(max_iter):
        pz = np.polyval(coeffs, z)
        dpz = np.polyval(dcoeffs, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            ratio = pz / dpz
            step = ratio / (1.0 - ratio * s)
        # exact roots and stalled derivatives
        step = np.where(pz == 0, 0.0, step)
        bad = ~np.isfinite(step)
        if bad.any():
            step[bad] = 0.0
            converged[bad] = False
        active = ~converged
        z = np.where(active, z - step, z)
        small = np.abs(step) <= 4 * _EPS * np.maximum(1.0, np.abs(z))
        converged |= small & ~bad
        if converged.all():
            return z, True
    return z, False


def _inclusion_radii(coeffs_low: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Weierstrass inclusion radii with rounding-aware residuals.

    ``coeffs_low`` are monic, lowest degree first.
    """
    d = len(z)
    high = coeffs_low[::-1]
    abs_high = np.abs(high)
    pz = np.abs(np.polyval(high, z))
    err = 4 * d * _EPS * np.polyval(abs_high, np.abs(z))
    diff = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(diff, 1.0)
    with np.errstate(divide="ignore", over="ignore"):
        denom = np.prod(diff, axis=1)
        radii = d * (pz + err) / denom
    radii[~np.isfinite(radii)] = np.inf
    return radii


def _cluster(z: np.ndarray, radii: np.ndarray, merge_tol: float) -> list[RootCluster]:
    d = len(z)
    parent = list(range(d))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    reach = radii + merge_tol * np.maximum(1.0, np.abs(z))
    for i in range(d):
        for j in range(i + 1, d):
            if abs(z[i] - z[j]) <= reach[i] + reach[j]:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(d):
        groups.setdefault(find(i), []).append(i)
    out = []
    for members in groups.values():
        loc = complex(np.mean(z[members]))
        spread = max(abs(z[k] - loc) for k in members)
        rad = float(min(max(spread, merge_tol * max(1.0, abs(loc))), np.max(reach[members])))
        out.append(RootCluster(loc, len(members), rad))
    return out


def _taylor(high: np.ndarray, c: complex) -> np.ndarray:
    """Taylor coefficients of the polynomial at ``c``, lowest order first."""
    work = np.array(high, dtype=complex)
    d = len(work) - 1
    out = np.empty(d + 1, dtype=complex)
    for k in range(d + 1):
        for j in range(1, d + 1 - k):
            work[j] += c * work[j - 1]
        out[k] = work[d - k]
    return out


def _pellet(high: np.ndarray, c: complex, r: float, m: int) -> bool:
    """True if the disk D(c, r) provably holds exactly ``m`` roots.

    Pellet's test on the Taylor expansion at ``c``; each coefficient is
    charged with a bound on its rounding error.
    """
    d = len(high) - 1
    b = np.abs(_taylor(high, c))
    err = 8 * d * _EPS * np.abs(_taylor(np.abs(high), abs(c))) + 1e-300
    powers = r ** np.arange(d + 1)
    lead = (b[m] - err[m]) * powers[m]
    rest = np.sum((b + err) * powers) - (b[m] + err[m]) * powers[m]
    return bool(lead > rest)


def _mst_edges(pts: np.ndarray) -> list[tuple[float, int, int]]:
    """Minimum spanning tree of points in the plane (Prim), as (length, a, b)."""
    n = len(pts)
    done = np.zeros(n, dtype=bool)
    done[0] = True
    best = np.abs(pts - pts[0])
    link = np.zeros(n, dtype=int)
    edges = []
    for _ in range(n - 1):
        k = int(np.argmin(np.where(done, np.inf, best)))
        edges.append((float(best[k]), int(link[k]), k))
        done[k] = True
        dist = np.abs(pts - pts[k])
        closer = dist < best
        best = np.where(closer, dist, best)
        link = np.where(closer, k, link)
    return edges


def _components(n: int, edges: list[tuple[float, int, int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for _, a, b in edges:
        parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _verified_radius(high: np.ndarray, c: complex, m: int, lo: float, hi: float) -> float | None:
    """Smallest radius on a geometric grid in [lo, hi] where Pellet confirms ``m`` roots."""
    if lo >= hi:
        return None
    for r in lo * (hi / lo) ** np.linspace(0, 1, 16):
        if _pellet(high, c, r, m):
            return float(r)
    return None


def _split(high: np.ndarray, z: np.ndarray, members: list[int]) -> list[tuple[list[int], float | None]]:
    """Break a cluster into Pellet-verified sub-clusters with disjoint disks.

    Cuts the k longest spanning-tree edges for k = 1, 2, ... and keeps the
    first cut whose pieces all verify; pieces are split further the same way.
    Returns (members, verified radius); the radius is None when no split held.
    """
    if len(members) < 2:
        return [(members, None)]
    pts = z[members]
    edges = sorted(_mst_edges(pts), reverse=True)
    for k in range(1, len(edges) + 1):
        parts = _components(len(members), edges[k:])
        centers = [complex(np.mean(pts[p])) for p in parts]
        spreads = [max(abs(pts[i] - c) for i in p) for p, c in zip(parts, centers)]
        radii = []
        for i, (p, c) in enumerate(zip(parts, centers)):
            gap = min(abs(c - centers[j]) - spreads[j] for j in range(len(parts)) if j != i)
            radii.append(_verified_radius(high, c, len(p), max(1.01 * spreads[i], 1e-4 * gap), gap))
        if None in radii:
            continue
        if any(radii[i] + radii[j] >= abs(centers[i] - centers[j])
               for i in range(len(parts)) for j in range(i + 1, len(parts))):
            continue
        out = []
        for p, r in zip(parts, radii):
            sub = _split(high, z, [members[i] for i in p])
            out.extend(sub if len(sub) > 1 else [(sub[0][0], r)])
        return out
    return [(members, None)]


def _refine(high: np.ndarray, z: np.ndarray, clusters: list[RootCluster], merge_tol: float) -> list[RootCluster]:
    out = []
    for c in clusters:
        if c.multiplicity == 1:
            out.append(c)
            continue
        members = [k for k in range(len(z)) if abs(z[k] - c.location) <= c.radius]
        if len(members) != c.multiplicity:
            out.append(c)
            continue
        groups = _split(high, z, members)
        if len(groups) == 1:
            out.append(c)
            continue
        for g, r in groups:
            loc = complex(np.mean(z[g]))
            out.append(RootCluster(loc, len(g), max(r, merge_tol * max(1.0, abs(loc)))))
    return out


def _polish(high: np.ndarray, c: RootCluster, limit: float, steps: int = 8) -> RootCluster:
    """Newton on the (m-1)-th derivative, where an m-fold root is simple.

    The total move is capped at ``limit`` so the iteration stays with this cluster.
    """
    if c.multiplicity == 1:
        return c
    f = np.polyder(high, c.multiplicity - 1)
    df = np.polyder(f)
    z = c.location
    for _ in range(steps):
        dz = np.polyval(df, z)
        if dz == 0:
            break
        delta = np.polyval(f, z) / dz
        if not np.isfinite(delta) or abs(z - delta - c.location) > limit:
            break
        z = z - delta
        if abs(delta) <= 4 * _EPS * max(1.0, abs(z)):
            break
    return RootCluster(complex(z), c.multiplicity, c.radius)


def sort_key(z: complex, digits: int = 9) -> tuple[float, float]:
    """(Re, Im) ordering that ignores floating noise below ``10**-digits``."""
    return (round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0)


def roots(
    p: ComplexPoly,
    tol: float = DEFAULT_TOL,
    merge_tol: float = DEFAULT_MERGE_TOL,
    restarts: int = 6,
    max_iter: int = 500,
) -> list[RootCluster]:
    """Roots of ``p`` grouped into clusters of coincident roots.

    Raises ``NoConvergence`` when the iteration fails from every restart.
    """
    if p.degree < 1:
        raise ValueError("roots() needs a polynomial of degree >= 1")
    coeffs = list(p.coeffs)
    zero_mult = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    clusters: list[RootCluster] = []
    if zero_mult:
        clusters.append(RootCluster(0j, zero_mult, 0.0))
    d = len(coeffs) - 1
    if d >= 1:
        low = np.asarray(coeffs, dtype=complex) / coeffs[-1]
        high = low[::-1]
        abs_low = np.abs(low)
        # Fujiwara-style bound keeps the initial circle tight
        bound = 2 * max(abs_low[d - k] ** (1.0 / k) for k in range(1, d + 1))
        bound = max(bound, 1e-3)
        rng = np.random.default_rng(12345)
        for attempt in range(restarts + 1):
            offset = 0.4 + 0.7 * attempt + (rng.uniform(0, 1) if attempt else 0.0)
            radius = bound * (1.0 if attempt == 0 else rng.uniform(0.5, 1.5))
            z0 = radius * np.exp(1j * (2 * np.pi * np.arange(d) / d + offset))
            z, ok = _aberth(high, z0, max_iter)
            residual = np.abs(np.polyval(high, z))
            scale = np.polyval(abs_low[::-1], np.abs(z))
            if np.all(np.isfinite(z)) and np.all(residual <= max(tol, 64 * d * _EPS) * np.maximum(scale, 1e-300)):
                break
        else:
            raise NoConvergence(f"root iteration failed for degree-{d} polynomial")
        radii = _inclusion_radii(low, z)
        found = _refine(high, z, _cluster(z, radii, merge_tol), merge_tol)
        for c in found:
            others = [abs(c.location - o.location) for o in found if o is not c]
            limit = 0.5 * min(others) if others else bound
            clusters.append(_polish(high, c, limit))
        if zero_mult:
            clusters = _merge_zero(clusters, merge_tol)
    clusters.sort(key=lambda c: sort_key(c.location))
    return clusters


def _merge_zero(clusters: list[RootCluster], merge_tol: float) -> list[RootCluster]:
    zero = clusters[0]
    rest = []
    mult = zero.multiplicity
    for c in clusters[1:]:
        if abs(c.location) <= c.radius + merge_tol:
            mult += c.multiplicity
        else:
            rest.append(c)
    return [RootCluster(0j, mult, zero.radius)] + rest


def from_roots(locations: Iterable[tuple[complex, int]]) -> ComplexPoly:
    """Monic polynomial with the given (root, multiplicity) pairs."""
    out = ComplexPoly([1])
    for r, m in locations:
        for _ in range(m):
            out = out * ComplexPoly([-r, 1])
    return out

