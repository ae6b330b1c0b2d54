"""Acceptance criteria, one check per criterion.

Each check returns ``(ok, detail)``. Under pytest every check is a test and a
PASS/FAIL line is printed in the terminal summary; run this file directly
(``python tests/test_acceptance.py``) to get the same lines without pytest.
"""

from __future__ import annotations

import math
import random
import statistics
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import sample_curves, transversal_lines  # noqa: E402
from ngonal.alexander import alexander_details, alexander_polynomial, libgober_matrix  # noqa: E402
from ngonal.bench import component_degrees, random_curve  # noqa: E402
from ngonal.braid import equal, exponent_sum, is_braid_automorphism, parse_word  # noqa: E402
from ngonal.curve import intersection_multiplicity, parse_curve, singular_fibers  # noqa: E402
from ngonal.exactalg import LaurentMatrix, LaurentPoly, T, normalize  # noqa: E402
from ngonal.rbd import build_diagram  # noqa: E402
from ngonal.tracker import default_eps0, global_monodromy, local_monodromy, track_loop  # noqa: E402

RESULTS: dict[str, tuple[bool, str]] = {}

REFERENCE_WORDS = ("s1^2", "s2 s1^2 s2^-1", "s2 s1^2 s2^-1", "s2^2", "s2^2", "s2 s2 s2 s1 s2 s2 s1 s2 s1 s2")
CORRECTED_SIXTH = "s2 s1 s2 s1 s2 s2 s1 s2 s1 s2"
REFERENCE_MATRIX = [
    [T**2 - 1, -T + 1], [0, 0],
    [T - 1, T**2 - T], [T - 1, T**2 - T], [T - 1, T**2 - T], [T - 1, T**2 - T],
    [0, 0], [-T**2 + T, T**2 - 1], [0, 0], [-T**2 + T, T**2 - 1],
    [T**4 - 1, T**5 - T**4], [0, T**6 - 1],
]


def W(text, n=3):
    return parse_word(text, n)


def record(key: str, ok: bool, detail: str) -> tuple[bool, str]:
    RESULTS[key] = (ok, detail)
    return ok, detail


def _reading(text: str):
    """A reference word read in crossing order, i.e. reversed into composition order."""
    w = W(text)
    return type(w)(w.n, tuple(reversed(w.letters)))


def _row_mismatches(words) -> list[int]:
    """1-based rows where the computed matrix differs from the reference one."""
    got = libgober_matrix(words)
    want = LaurentMatrix.from_rows(REFERENCE_MATRIX)
    return [k + 1 for k in range(want.rows) if got.row(k) != want.row(k)]


# 1 -----------------------------------------------------------------------

def check_1():
    start = time.perf_counter()
    xs = [f.x for f in singular_fibers(parse_curve("(y-x^2)(y-x-1)(y+1)"))]
    elapsed = time.perf_counter() - start
    exact = [-2, (1 - math.sqrt(5)) / 2, -1j, 1j, (1 + math.sqrt(5)) / 2]
    err = max(min(abs(x - e) for x in xs) for e in exact) if len(xs) == 5 else math.inf
    ok = len(xs) == 5 and err < 1e-8 and elapsed < 1
    return record("1", ok, f"{len(xs)} fibers, max error {err:.1e}, {elapsed * 1000:.1f} ms")


# 2 -----------------------------------------------------------------------

def check_2():
    start = time.perf_counter()
    res = global_monodromy(parse_curve("(y-x)(y+x)(y-1)"))
    elapsed = time.perf_counter() - start
    targets = ["s2^-1 s1^-1 s2^2 s1 s2", "s2^-1 s1^2 s2", "s2^2", "s2 s1 s2 s2 s1 s2"]
    same = len(res) == 4 and all(equal(r.word, W(t)) for r, t in zip(res, targets))
    words = ", ".join(str(r.word) for r in res)
    return record("2", same and elapsed < 5, f"[{words}], {elapsed * 1000:.0f} ms")


# 3 -----------------------------------------------------------------------

def check_3():
    c = parse_curve("(y+2x)(y+x^2)(y-x^2)")
    fibers = singular_fibers(c)
    k = min(range(len(fibers)), key=lambda i: abs(fibers[i].x))
    local = local_monodromy(c, build_diagram([f.x for f in fibers]), k).word
    ok = equal(local, W("s2 s1 s2 s1 s1 s2 s1 s2")) and equal(local, W("s1 s2^2 s1 s2^4"))
    based = next(r.word for r in global_monodromy(c) if r.fiber and abs(r.fiber.x) < 1e-9)
    conj = equal(based, W("s1^-1") * local * W("s1"))
    return record("3", ok, f"local word {local}; base-point word {based} is its s1-conjugate: {conj}")


# 4 -----------------------------------------------------------------------

def check_4_literal():
    bad = _row_mismatches([W(t) for t in REFERENCE_WORDS])
    return record("4", not bad, "reference words as given: " + (f"rows {bad} differ" if bad else "all 12 rows match"))


def check_4a():
    bad = _row_mismatches([_reading(t) for t in REFERENCE_WORDS])
    ok = bad == [11, 12]
    return record("4a", ok, f"crossing-order reading: rows 1-10 match, differing rows {bad} come from the sixth word")


def check_4b():
    words = [_reading(t) for t in REFERENCE_WORDS[:5]] + [W(CORRECTED_SIXTH)]
    bad = _row_mismatches(words)
    computed_inf = global_monodromy(parse_curve("(y-x^2)(y-x-1)(y-1)"))[-1].word
    ok = not bad and equal(computed_inf, W(CORRECTED_SIXTH))
    return record("4b", ok, f"sixth word read as {CORRECTED_SIXTH}: mismatching rows {bad}; "
                  f"equals the computed infinity word: {equal(computed_inf, W(CORRECTED_SIXTH))}")


# 5 -----------------------------------------------------------------------

KNOWN = [
    ("(y-x^2)(y-x-1)(y-1)", (T - 1) ** 2),
    ("(y-x^2)(y-2x)(y+2x)(y)", (T - 1) ** 3),
    ("(y-x^2)(y+2x+1)(y-2x+1)", (T**2 + 1) * (T - 1) ** 2),
    ("(y+x^2)(y-x^2)(y)", (T**6 - 1) * (T**3 + 1) * (T - 1)),
]


def check_5():
    parts, ok = [], True
    for text, expected in KNOWN:
        start = time.perf_counter()
        res = alexander_details(parse_curve(text))
        elapsed = time.perf_counter() - start
        good = res.polynomial == normalize(expected) and elapsed < 30
        ok &= good
        parts.append(f"{res.display} ({elapsed:.2f} s)")
    return record("5", ok, "; ".join(parts))


# 6 -----------------------------------------------------------------------

def family(m):
    tail = sum((T ** (3 * k) for k in range(m)), LaurentPoly())
    return normalize((T ** (3 * m) - 1) * tail * (T - 1))


def check_6():
    ok, parts = True, []
    for m in (1, 2, 3):
        got = alexander_details(parse_curve(f"(y+x^{m})(y-x^{m})(y)"))
        ok &= got.polynomial == family(m)
        parts.append(f"m={m}: {got.display}")
    return record("6", ok, "; ".join(parts))


# 7 -----------------------------------------------------------------------

def check_7(count=60, seed=20241016, lines=20):
    curves = sample_curves(count, seed)
    fails = {"a": 0, "b": 0, "c": 0, "d": 0, "e": 0}
    for c in curves:
        res = global_monodromy(c)
        fails["a"] += not all(is_braid_automorphism(r.word) for r in res)
        finite = [r for r in res if not r.is_infinity]
        fails["b"] += sum(exponent_sum(r.word) for r in finite) != exponent_sum(res[-1].word)
        fails["c"] += not all(
            exponent_sum(r.word) == 2 * sum(intersection_multiplicity(c, i, j, r.fiber.x) for i, j, _ in r.fiber.pairs)
            for r in finite)
        fails["d"] += not all(track_loop(c, r.loop, default_eps0(r.loop) / 2).word == r.word
                              for r in res if r.loop.vertices)
    rng = random.Random(seed)
    for k in range(lines):
        c = transversal_lines(rng, 2 + k % 3)
        fails["e"] += alexander_polynomial(c) != (T - 1) ** (c.n - 1)
    ok = not any(fails.values())
    return record("7", ok, f"{count} random curves, {lines} line arrangements; failures {fails}")


# 8 -----------------------------------------------------------------------

def check_8(count=10, seed=9):
    rng = random.Random(seed)
    times = []
    for _ in range(count):
        c = random_curve(rng, component_degrees(9))
        start = time.perf_counter()
        global_monodromy(c)
        times.append(time.perf_counter() - start)
    ok = max(times) < 60
    return record("8", ok, f"{count} trigonal curves of degree 9: mean {statistics.fmean(times):.3f} s, "
                  f"max {max(times):.3f} s")


# pytest entry points ------------------------------------------------------

def _assert(result):
    ok, detail = result
    assert ok, detail


def test_criterion_1_fibers():
    _assert(check_1())


def test_criterion_2_global_monodromy():
    _assert(check_2())


def test_criterion_3_local_monodromy():
    _assert(check_3())


@pytest.mark.xfail(strict=True, reason="the sixth reference word cannot produce the last two reference rows")
def test_criterion_4_reference_words_literal():
    _assert(check_4_literal())


def test_criterion_4a_first_ten_rows():
    _assert(check_4a())


def test_criterion_4b_corrected_sixth_word():
    _assert(check_4b())


def test_criterion_5_known_polynomials():
    _assert(check_5())


def test_criterion_6_family():
    _assert(check_6())


def test_criterion_7_properties():
    _assert(check_7())


def test_criterion_8_performance():
    _assert(check_8())


CHECKS = [check_1, check_2, check_3, check_4_literal, check_4a, check_4b, check_5, check_6, check_7, check_8]


def summary_lines() -> list[str]:
    return [f"CRITERION {k}: {'PASS' if ok else 'FAIL'} - {detail}" for k, (ok, detail) in RESULTS.items()]


if __name__ == "__main__":
    for check in CHECKS:
        check()
    print("\n".join(summary_lines()))
