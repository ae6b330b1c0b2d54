import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CURVE_CONIC_THROUGH, CURVE_FIVE_FIBERS, CURVE_THREE_LINES, sample_curves
from ngonal.curve import Curve, intersection_multiplicity, pair_roots, parse_curve, singular_fibers
from ngonal.errors import CurveSyntaxError, DuplicateComponent, NotAFiber

SQ5 = math.sqrt(5)


def xs(text):
    return [f.x for f in singular_fibers(parse_curve(text))]


def close_sets(found, expected, tol=1e-8):
    return len(found) == len(expected) and all(min(abs(f - e) for f in found) < tol for e in expected)


class TestParse:
    @pytest.mark.parametrize("text, comps", [
        (CURVE_FIVE_FIBERS, ["x^2", "x + 1", "-1"]),
        (CURVE_THREE_LINES, ["x", "-x", "1"]),
        ("y1 = x^2; y2 = x+1", ["x^2", "x + 1"]),
        ("(y-(1+2i)x^2)(y-x/3)(y+0.5)", ["(1+2i)*x^2", "1/3*x", "-1/2"]),
        ("(y - 2i*x^3 + 3/4)(y)", ["2i*x^3 - 3/4", "0"]),
    ])
    def test_components(self, text, comps):
        c = parse_curve(text)
        assert c.describe() == comps
        assert c.n == len(comps)
        assert c.source_text == text

    def test_duplicate(self):
        with pytest.raises(DuplicateComponent):
            parse_curve("(y-x)(y-x)")

    def test_duplicate_after_normalising(self):
        with pytest.raises(DuplicateComponent):
            parse_curve("(y-2x)(y-x-x)")

    @pytest.mark.parametrize("text, pos", [
        ("", 0), ("(y-x", 4), ("(z-x)", 1), ("(y-x^)", 5), ("(y-x)(y-1/0)", 11), ("(y-x)(y+x) junk", 11),
    ])
    def test_syntax_errors_carry_position(self, text, pos):
        with pytest.raises(CurveSyntaxError) as info:
            parse_curve(text)
        assert info.value.position == pos


class TestFibers:
    def test_five_fibers(self):
        expected = [-2, (1 - SQ5) / 2, -1j, 1j, (1 + SQ5) / 2]
        found = xs(CURVE_FIVE_FIBERS)
        assert close_sets(found, expected)
        assert all(abs(f - e) < 1e-8 for f, e in zip(found, expected))  # sorted by (Re, Im)

    def test_three_lines(self):
        assert close_sets(xs(CURVE_THREE_LINES), [-1, 0, 1])

    def test_conic_and_lines(self):
        assert close_sets(xs(CURVE_CONIC_THROUGH), [0, -1, 1, (1 - SQ5) / 2, (1 + SQ5) / 2])

    def test_pairs_recorded(self):
        fibers = singular_fibers(parse_curve(CURVE_FIVE_FIBERS))
        assert [f.pairs for f in fibers] == [((1, 2, 1),), ((0, 1, 1),), ((0, 2, 1),), ((0, 2, 1),), ((0, 1, 1),)]

    def test_triple_point_merges_pairs(self):
        [f] = singular_fibers(parse_curve("(y+x^2)(y-x^2)(y)"))
        assert f.x == 0 and f.pairs == ((0, 1, 2), (0, 2, 2), (1, 2, 2))
        assert f.total_multiplicity == 6

    def test_parallel_lines_have_no_fibers(self):
        assert singular_fibers(parse_curve("(y-x)(y-x-1)")) == []

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10_000))
    def test_multiplicities_add_up(self, seed):
        [c] = sample_curves(1, seed)
        total = sum(f.total_multiplicity for f in singular_fibers(c))
        degs = sum(_diff_deg(a, b) for i, a in enumerate(c.exact) for b in c.exact[i + 1:])
        assert total == degs


def _diff_deg(a, b):
    zero = (0, 0)
    m = max(len(a), len(b))
    a, b = list(a) + [zero] * (m - len(a)), list(b) + [zero] * (m - len(b))
    d = [(x[0] - y[0], x[1] - y[1]) for x, y in zip(a, b)]
    while d and d[-1] == (0, 0):
        d.pop()
    return len(d) - 1


class TestMultiplicity:
    @pytest.mark.parametrize("text, i, j, x0, m", [
        ("(y-x)(y+x)", 0, 1, 0, 1),
        ("(y-x^2)(y+x^2)", 0, 1, 0, 2),
        ("(y+2x)(y+x^2)", 0, 1, 0, 1),
        ("(y-x^3)(y)", 0, 1, 0, 3),
    ])
    def test_examples(self, text, i, j, x0, m):
        assert intersection_multiplicity(parse_curve(text), i, j, x0) == m

    def test_not_a_fiber(self):
        with pytest.raises(NotAFiber):
            intersection_multiplicity(parse_curve("(y-x)(y+x)"), 0, 1, 1)

    def test_pair_roots(self):
        [r] = pair_roots(parse_curve("(y-x^2)(y-2x+1)"), 0, 1)
        assert abs(r.location - 1) < 1e-9 and r.multiplicity == 2


def test_from_exact_roundtrip():
    c = Curve.from_exact([[0, 0, 1], [1, 1], [-1]])
    assert c.describe() == ["x^2", "x + 1", "-1"]
    assert close_sets([f.x for f in singular_fibers(c)], xs("(y-x^2)(y-x-1)(y+1)"))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.randoms())
def test_fibers_independent_of_component_order(seed, rnd):
    [c] = sample_curves(1, seed)
    perm = list(range(c.n))
    rnd.shuffle(perm)
    d = Curve.from_exact([c.exact[k] for k in perm])
    a, b = singular_fibers(c), singular_fibers(d)
    assert len(a) == len(b)
    for f, g in zip(a, b):
        assert abs(f.x - g.x) < 1e-9
        relabel = sorted((min(perm[i], perm[j]), max(perm[i], perm[j]), m) for i, j, m in g.pairs)
        assert relabel == sorted(f.pairs)
