from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cfseries import FloatField, SeriesField

F = Fraction


@pytest.fixture
def f128():
    return FloatField(128)


@pytest.fixture
def ser8():
    return SeriesField(8)


def rationals(max_num=9, max_den=9, nonzero=False):
    s = st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))
    return s.filter(bool) if nonzero else s
