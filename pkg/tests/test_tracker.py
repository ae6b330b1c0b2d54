import pytest

from conftest import CURVE_TANGENT_CUSP, CURVE_THREE_LINES
from ngonal.braid import BraidWord, equal, exponent_sum, parse_word
from ngonal.curve import parse_curve, singular_fibers
from ngonal.errors import StepUnderflow, StrandCollision
from ngonal.rbd import DiagramLoop, build_diagram
from ngonal.tracker import (
    choose_step,
    default_eps0,
    global_monodromy,
    local_monodromy,
    step_bound,
    strand_state,
    track_crossings,
    track_loop,
)


def W(text, n=3):
    return parse_word(text, n)


class TestStepBound:
    def test_quadratic(self):
        c = parse_curve("(y-x^2)(y)")
        assert step_bound(c, 2, 0.5)[0] == pytest.approx(2.5)

    def test_constant_and_linear(self):
        c = parse_curve("(y-3)(y-x)")
        assert step_bound(c, 7 + 2j, 0.3) == pytest.approx([0.0, 0.3])

    def test_direction_matters(self):
        c = parse_curve("(y-x^2)(y)")
        assert step_bound(c, 2, 0.5, -1)[0] == pytest.approx(0.5 * 2 * 2)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            step_bound(parse_curve("(y-x)(y)"), 0, 0)


class TestChooseStep:
    def test_accepts_initial(self):
        c = parse_curve("(y-x)(y+x)")
        assert choose_step(c, strand_state(c, 1), 0.1) == 0.1

    def test_halves_until_strict(self):
        c = parse_curve("(y-x)(y+x)")
        assert choose_step(c, strand_state(c, 0.05), 0.1) == 0.025

    def test_constant_strands(self):
        c = parse_curve("(y-1)(y+1)(y)")
        assert choose_step(c, strand_state(c, 3), 0.7) == 0.7

    def test_state_order_by_real_part(self):
        s = strand_state(parse_curve("(y-x)(y+x)(y-1)"), 0.5)
        assert s.order == (1, 0, 2)


@pytest.fixture(scope="module")
def results():
    return global_monodromy(parse_curve(CURVE_THREE_LINES))


@pytest.fixture(scope="module")
def setup():
    c = parse_curve(CURVE_TANGENT_CUSP)
    fibers = singular_fibers(c)
    d = build_diagram([f.x for f in fibers])
    k = min(range(len(fibers)), key=lambda i: abs(fibers[i].x))
    return c, d, k


class TestThreeLines:
    def test_fiber_order(self, results):
        assert [r.fiber.x if r.fiber else None for r in results] == [-1, 0, 1, None]

    @pytest.mark.parametrize("k, expected", [
        (0, "s2^-1 s1^-1 s2^2 s1 s2"),
        (1, "s2^-1 s1^2 s2"),
        (2, "s2^2"),
        (3, "s2 s1 s2 s2 s1 s2"),
    ])
    def test_words(self, results, k, expected):
        assert equal(results[k].word, W(expected))

    def test_literal_words(self, results):
        assert [str(r.word) for r in results] == [
            "s2^-1 s1^-1 s2^2 s1 s2", "s2^-1 s1^2 s2", "s2^2", "s2 s1 s2^2 s1 s2"]

    def test_travel_order_is_reversed(self, results):
        c = parse_curve(CURVE_THREE_LINES)
        letters, _ = track_crossings(c, results[1].loop)
        assert tuple(reversed(letters)) == results[1].word.letters


def test_two_strands():
    res = global_monodromy(parse_curve("(y-x)(y+x)"))
    assert [str(r.word) for r in res] == ["s1^2", "s1^2"]


def test_no_fibers_gives_trivial_infinity():
    [r] = global_monodromy(parse_curve("(y-x)(y-x-1)"))
    assert r.is_infinity and r.word == BraidWord(2)


def test_single_component_rejected():
    with pytest.raises(ValueError):
        global_monodromy(parse_curve("(y-x)"))


class TestTangentCusp:
    TARGETS = ("s2 s1 s2 s1 s1 s2 s1 s2", "s1 s2^2 s1 s2^4")

    def test_local_word(self, setup):
        c, d, k = setup
        w = local_monodromy(c, d, k).word
        for target in self.TARGETS:
            assert equal(w, W(target))

    def test_based_word_is_a_conjugate(self, setup):
        c, d, k = setup
        based = next(r for r in global_monodromy(c) if r.fiber and abs(r.fiber.x) < 1e-9)
        local = W(self.TARGETS[0])
        assert not equal(based.word, local)
        assert equal(based.word, W("s1^-1") * local * W("s1"))


class TestFailures:
    def test_loop_through_a_fiber_underflows(self):
        c = parse_curve("(y-x)(y+x)")
        with pytest.raises(StepUnderflow):
            track_loop(c, DiagramLoop((-1 + 1e-12j, 1 + 1e-12j), 0), eps0=10)

    def test_collision_at_start(self):
        c = parse_curve("(y-x)(y+x)")
        with pytest.raises(StrandCollision):
            track_loop(c, DiagramLoop((0j, 1 + 0j), 0))


def test_default_eps0_ignores_dust():
    loop = DiagramLoop((0j, 1 + 0j, 1 + 1e-14 + 0j, 1 + 1j, 0j), 0)
    assert default_eps0(loop) == pytest.approx(1 / 16)


def test_halving_eps0_keeps_words(random_curves):
    for c in random_curves[:15]:
        for r in global_monodromy(c):
            if r.loop.vertices:
                assert track_loop(c, r.loop, default_eps0(r.loop) / 2).word == r.word


def test_exponent_sums_balance(random_curves):
    for c in random_curves:
        res = global_monodromy(c)
        assert sum(exponent_sum(r.word) for r in res[:-1]) == exponent_sum(res[-1].word)


def test_conic_through_words_match_reference_in_crossing_order():
    res = global_monodromy(parse_curve("(y-x^2)(y-x-1)(y-1)"))
    reference = {-1.0: "s2 s1^2 s2^-1", -0.618: "s2^2", 0.0: "s1^2", 1.0: "s2 s1^2 s2^-1", 1.618: "s2^2"}
    for r in res[:-1]:
        w = W(reference[round(r.fiber.x.real, 3)])
        assert equal(r.word, BraidWord(3, tuple(reversed(w.letters))))
    assert equal(res[-1].word, W("s2 s1 s2 s1 s2 s2 s1 s2 s1 s2"))
