from __future__ import annotations

import random
from fractions import Fraction

import pytest

from fibclifford.quat import AlgebraParams

# The four parameter pairs exercised throughout: one split with negative
# discriminant, two split with either sign, one with fractional parameters.
CLASS_FIXTURES = (
    AlgebraParams(1, -1),
    AlgebraParams(-2, -3),
    AlgebraParams(2, -3),
    AlgebraParams(Fraction(-1, 2), Fraction(-1, 2)),
)

# The same set with the Hamilton algebra swapped in for (2, -3), used where
# a division algebra needs to be covered as well.
NORM_ALGEBRAS = (
    AlgebraParams(1, 1),
    AlgebraParams(1, -1),
    AlgebraParams(-2, -3),
    AlgebraParams(Fraction(-1, 2), Fraction(-1, 2)),
)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xF1B0)


def random_fraction(rng: random.Random, span: int = 60, max_den: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))
