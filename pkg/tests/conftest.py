import random

import pytest
from hypothesis import strategies as st

from trigroups.words import Word


def words(min_len: int = 1, max_len: int = 20):
    return st.lists(st.sampled_from((1, 2)), min_size=min_len, max_size=max_len).map(
        lambda a: Word(tuple(a))
    )


@pytest.fixture
def rng():
    return random.Random(20240611)
