import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fpscomp import ApproxField, ExactField, TruncatedSeries

N = 32


@pytest.fixture(scope="session")
def exact():
    return ExactField(24)


@pytest.fixture(scope="session")
def approx():
    return ApproxField(1e-9)


def gamma_series(field, rng, order, trunc=N, lead=1, span=3):
    """Random series of the given order with rational integer tail."""
    pairs = [(order, lead)]
    pairs += [(i, rng.randint(-span, span)) for i in range(order + 1, trunc + 1)]
    return TruncatedSeries.from_pairs(field, pairs, trunc)


def unit_series(field, rng, trunc=N, lead=1, span=2):
    pairs = [(1, lead)]
    pairs += [(i, rng.randint(-span, span)) for i in range(2, trunc + 1)]
    return TruncatedSeries.from_pairs(field, pairs, trunc)


def to_fractions(series):
    """Exact-backend rational coefficients as stdlib Fractions."""
    from fractions import Fraction

    out = []
    for c in series.coeffs:
        s = series.field.scalar_to_json(c)
        assert all(x == "0/1" for x in s[1:]), "coefficient is not rational"
        out.append(Fraction(s[0]))
    return out


def from_fractions(field, coeffs, trunc=N):
    return TruncatedSeries(field, [field.coerce(c) for c in coeffs], trunc)


@pytest.fixture()
def rng():
    return random.Random(20260823)
