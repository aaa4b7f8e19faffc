import os
import sys

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from schubaut.rootsys import build  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2)]


@pytest.fixture(params=SMALL, ids=lambda p: f"{p[0]}{p[1]}")
def small_rs(request):
    return build(*request.param)


def words(rank, max_len=8):
    return st.lists(st.integers(min_value=1, max_value=rank), max_size=max_len)


systems = st.sampled_from(SMALL).map(lambda p: build(*p))


@st.composite
def system_and_word(draw, max_len=8):
    rs = draw(systems)
    return rs, draw(words(rs.rank, max_len))
