import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from alexspace import Space, enumerate_topologies, random_space  # noqa: E402


def table(*rows):
    """Build a Space from neighbourhood rows given as iterables of indices."""
    return Space.from_masks([sum(1 << i for i in r) for r in rows])


@pytest.fixture(scope="session")
def spaces_upto4():
    return [S for n in range(5) for S in enumerate_topologies(n)]


@pytest.fixture(scope="session")
def spaces_n4():
    return list(enumerate_topologies(4))


@pytest.fixture
def indiscrete2():
    return table([0, 1], [0, 1])


@pytest.fixture
def sierpinski():
    return table([0], [0, 1])


@pytest.fixture
def trap3():
    # {0,1} is an indiscrete pair sitting over the open point 2
    return table([0, 1, 2], [0, 1, 2], [2])


@st.composite
def spaces(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_space(n, random.Random(seed))


@st.composite
def space_and_subset(draw, max_n=5):
    S = draw(spaces(max_n))
    a = draw(st.integers(0, (1 << S.n) - 1))
    return S, a
