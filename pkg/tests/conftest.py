from fractions import Fraction as F

import pytest

from lamkit.chords import chord


@pytest.fixture
def trio():
    return [chord(0, F(1, 2)), chord(F(1, 6), F(1, 3)), chord(F(2, 3), F(5, 6))]
