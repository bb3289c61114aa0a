"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

import pytest

from twistchar import Monomial, RootSystemKind, build_root_system, x


def kind_of(label):
    """Kind from the lattice label: A7 is the rank-7 lattice (parameter 4)."""
    if label == "E6":
        return RootSystemKind("E6")
    if label[0] == "A":
        rank = int(label[1:])
        assert rank % 2 == 1
        return RootSystemKind("A", (rank + 1) // 2)
    return RootSystemKind("D", int(label[1:]))


@pytest.fixture(scope="session")
def systems():
    """The root systems exercised throughout, built once, keyed by lattice label."""
    labels = ["A3", "A5", "A7", "A9", "A11", "A13", "A15",
              "D4", "D5", "D6", "D7", "D8", "E6"]
    return {lab: build_root_system(kind_of(lab)) for lab in labels}


# the seven systems the quantitative acceptance criteria run on
CHARACTER_SYSTEMS = ["A3", "A5", "A7", "D4", "D5", "D6", "E6"]


@lru_cache(maxsize=None)
def partitions_max_part(n: int, max_part: int) -> int:
    """Partitions of n into parts of size at most max_part (brute recursion)."""
    if n == 0:
        return 1
    if n < 0 or max_part == 0:
        return 0
    return partitions_max_part(n - max_part, max_part) + \
        partitions_max_part(n, max_part - 1)


def partitions_bounded_count_divisible(n: int, m: int, a: int) -> int:
    """Partitions of n into at most m parts, each divisible by a.

    Scaling by a and conjugating turns these into partitions of n/a with
    parts at most m, which the brute recursion counts directly.
    """
    if n % a:
        return 0
    return partitions_max_part(n // a, m)


# the three displayed charge matrices, rebuilt from their band structure

def expected_matrix_a(n: int):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
    m[n - 1][n - 1] = 4
    for i in range(n - 1):
        m[i][i + 1] = m[i + 1][i] = -1
    m[n - 2][n - 1] = m[n - 1][n - 2] = -2
    return tuple(tuple(r) for r in m)


def expected_matrix_d(n: int):
    k = n - 1
    m = [[0] * k for _ in range(k)]
    for i in range(k):
        m[i][i] = 4
    m[k - 1][k - 1] = 2
    for i in range(k - 1):
        m[i][i + 1] = m[i + 1][i] = -2
    return tuple(tuple(r) for r in m)


EXPECTED_MATRIX_E6 = (
    (2, -1, 0, 0),
    (-1, 2, -2, 0),
    (0, -2, 4, -2),
    (0, 0, -2, 4),
)


def random_monomial(rs, rng: random.Random, max_factors: int = 4) -> Monomial:
    """A random nonzero monomial with legal modes for each factor's root."""
    mono = Monomial(Fraction(rng.choice([1, -1, 2, 3]), rng.choice([1, 2])), ())
    for _ in range(rng.randint(0, max_factors)):
        r = rng.randrange(len(rs.positive_roots))
        if rs.is_root_fixed(r):
            m = Fraction(rng.randint(-5, 5))
        else:
            m = Fraction(rng.randint(-10, 10), 2)
        factor = x(rs, r, m)
        if not factor.is_zero():
            mono = mono * factor
    return mono
