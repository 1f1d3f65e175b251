from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from lmss.atlas import enumerate_connected_graphs
from lmss.graph import from_edges


@pytest.fixture(scope="session")
def atlas6():
    return [G for n in range(1, 7) for G in enumerate_connected_graphs(n)]


@pytest.fixture(scope="session")
def atlas7(atlas6):
    return atlas6 + list(enumerate_connected_graphs(7))


@st.composite
def small_graphs(draw, max_n: int = 8, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edges(n, chosen)
