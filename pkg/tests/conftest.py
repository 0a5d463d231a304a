import random

import pytest
from hypothesis import strategies as st

from vknot.diagram import Role, validate


@st.composite
def diagrams(draw, min_chords=0, max_chords=6):
    n = draw(st.integers(min_chords, max_chords))
    eps = [(c, r) for c in range(1, n + 1) for r in (Role.HEAD, Role.TAIL)]
    eps = draw(st.permutations(eps))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    return validate(eps, dict(zip(range(1, n + 1), signs)))


@pytest.fixture
def rng():
    return random.Random(20261017)
