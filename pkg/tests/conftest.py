import random
import sys

import pytest

from ngonal.bench import random_curve
from ngonal.curve import Curve, singular_fibers

# Curves with a known exact answer, used across several test modules.
CURVE_FIVE_FIBERS = "(y-x^2)(y-x-1)(y+1)"
CURVE_THREE_LINES = "(y-x)(y+x)(y-1)"
CURVE_CONIC_THROUGH = "(y-x^2)(y-x-1)(y-1)"
CURVE_TANGENT_CUSP = "(y+2x)(y+x^2)(y-x^2)"


def sample_curves(count: int, seed: int, max_n: int = 4, max_deg: int = 3):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        degs = [rng.randint(1, max_deg) for _ in range(n)]
        out.append(random_curve(rng, degs))
    return out


@pytest.fixture(scope="session")
def random_curves():
    return sample_curves(60, seed=20241016)


def transversal_lines(rng: random.Random, n: int) -> Curve:
    """n lines with distinct slopes and no three through one point."""
    while True:
        slopes = rng.sample(range(-6, 7), n)
        comps = [[rng.randint(-5, 5), a] for a in slopes]
        c = Curve.from_exact(comps)
        fibers = singular_fibers(c)
        if len(fibers) == n * (n - 1) // 2 and all(len(f.pairs) == 1 for f in fibers):
            return c


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
