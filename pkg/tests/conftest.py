import sys
import random

import pytest
from hypothesis import strategies as st

from enhanced_alexander.fixtures import GAUSS, fixture, random_gauss_diagram
from enhanced_alexander.laurent import LaurentPoly


@pytest.fixture(scope="session")
def fixtures():
    return {name: fixture(name) for name in GAUSS}


laurent_polys = st.builds(
    LaurentPoly,
    st.lists(st.integers(-6, 6), max_size=5),
    st.integers(-3, 3),
)


@st.composite
def random_diagrams(draw, max_crossings=10, max_components=3):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    n = draw(st.integers(0, max_crossings))
    mu = draw(st.integers(1, max_components))
    return random_gauss_diagram(rng, n, mu)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
