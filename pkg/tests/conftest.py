"""Shared oracle helpers for the test suite."""

import random

import pytest

import symfai as s


def fai_brute(f: s.Sanfv) -> tuple[int, int]:
    """(AI, FAI) through the pure-dense pipeline, the independent slow route."""
    d = s.dense_from_sanfv(f)
    a = s.ai(d)
    if a <= 1:
        return a, 2 * a
    best = 2 * a
    for e in range(1, a):
        result = s.min_multiplier_degree(d, e)
        assert result.annihilator is None, "annihilator below AI"
        best = min(best, e + result.d)
    return a, best


def random_sanfv(rng: random.Random, n: int) -> s.Sanfv:
    return s.Sanfv(n, rng.getrandbits(n + 1))


@pytest.fixture(scope="session")
def rng():
    return random.Random(0xC0FFEE)
