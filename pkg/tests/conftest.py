from itertools import combinations

import pytest
from hypothesis import strategies as st

from grundylab.enumeration import enumerate_graphs
from grundylab.families import complete, cycle, path
from grundylab.graph import from_edges


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, k in zip(pairs, keep) if k])


@pytest.fixture(scope="session")
def corpus6():
    return [g for n in range(1, 7) for g in enumerate_graphs(n)]


@pytest.fixture(scope="session")
def c4():
    return cycle(4)


@pytest.fixture(scope="session")
def p4():
    return path(4)


@pytest.fixture(scope="session")
def k4():
    return complete(4)
