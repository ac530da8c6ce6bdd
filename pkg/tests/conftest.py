import random

import pytest
from hypothesis import assume, strategies as st

from platdga.diagram import PlatDiagram
from platdga.errors import NotAKnotError


@st.composite
def plats(draw, max_cusps=3, max_crossings=6, min_crossings=0):
    n = draw(st.integers(1, max_cusps))
    m = draw(st.integers(min_crossings, max_crossings)) if n > 1 else 0
    word = tuple(draw(st.integers(1, 2 * n - 2)) for _ in range(m))
    try:
        return PlatDiagram(n, word)
    except NotAKnotError:
        assume(False)


def seeded_plats(count, seed, max_cusps=3, max_crossings=8):
    """Deterministic sample of random plat knots for slow whole-pipeline tests."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_cusps)
        m = rng.randint(0, max_crossings) if n > 1 else 0
        word = tuple(rng.randint(1, 2 * n - 2) for _ in range(m))
        try:
            out.append(PlatDiagram(n, word))
        except NotAKnotError:
            continue
    return out


@pytest.fixture
def trefoil():
    return PlatDiagram(2, (2, 2, 2))


@pytest.fixture
def unknot():
    return PlatDiagram(1, ())


@pytest.fixture
def kinked_unknot():
    return PlatDiagram(2, (1, 2))


@pytest.fixture
def two_cusp_unknot():
    return PlatDiagram(2, (2,))
