#!/usr/bin/env python3
"""
Проверка на больших индексах: L_{10^6} алгоритмом Middle.

Количество цифр сверяется с асимптотикой ⌊n·log10 φ⌋ + 1, остаток по модулю
10^9 + 7 - с независимым возведением матрицы в степень по модулю.
"""

import math
import sys
import time
from pathlib import Path

import gmpy2
import pytest

# Добавляем путь к проекту
sys.path.append(str(Path(__file__).resolve().parent))

from sequences import Algorithm, iter_lucas_linear, lucas

MODULUS = 10 ** 9 + 7
SCALE_INDEX = 10 ** 6
GOLDEN_RATIO = (1 + math.sqrt(5)) / 2


def mat_mul_mod(a, b, modulus):
    return (
        ((a[0][0] * b[0][0] + a[0][1] * b[1][0]) % modulus, (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % modulus),
        ((a[1][0] * b[0][0] + a[1][1] * b[1][0]) % modulus, (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % modulus),
    )


def lucas_mod(n: int, modulus: int) -> int:
    """L_n mod modulus как след Q^n, Q = [[1, 1], [1, 0]]."""
    result = ((1, 0), (0, 1))
    base = ((1, 1), (1, 0))
    while n:
        if n & 1:
            result = mat_mul_mod(result, base, modulus)
        base = mat_mul_mod(base, base, modulus)
        n >>= 1
    return (result[0][0] + result[1][1]) % modulus


def test_modular_oracle_on_small_indices():
    for n, value in enumerate(iter_lucas_linear(300)):
        assert lucas_mod(n, MODULUS) == value % MODULUS


@pytest.fixture(scope="module")
def million():
    start = time.perf_counter()
    value = lucas(SCALE_INDEX, Algorithm.MIDDLE)
    return value, time.perf_counter() - start


def test_million_is_fast(million):
    _, elapsed = million
    assert elapsed < 10


def test_million_digit_count(million):
    value, _ = million
    expected = math.floor(SCALE_INDEX * math.log10(GOLDEN_RATIO)) + 1
    assert expected == 208988
    assert len(gmpy2.mpz(value).digits(10)) == expected


def test_million_modular_residue(million):
    value, _ = million
    assert value % MODULUS == lucas_mod(SCALE_INDEX, MODULUS)


@pytest.mark.parametrize("algo", [Algorithm.RIPPLE_MEMO, Algorithm.FIB_DOUBLING])
def test_large_index_other_algorithms(algo):
    n = 123457
    assert lucas(n, algo) % MODULUS == lucas_mod(n, MODULUS)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
