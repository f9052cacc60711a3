"""
Модуль преобразований между числами Люка и Фибоначчи.

Точный переход использует целочисленное тождество 5F_n² = L_n² - 4(-1)^n
и точный целый корень; формула с округлением через √5 оставлена
только для сравнения.
"""

import math
from typing import Optional

import gmpy2

from metrics.counters import OpCounts, counted_square, ensure_counter
from sequences.bit_path import check_index
from utils import InconsistencyError, UsageError


def isqrt(x: int) -> int:
    """
    Целая часть квадратного корня: r² <= x < (r + 1)².

    Args:
        x (int): Неотрицательное число.

    Returns:
        int: ⌊√x⌋.
    """
    if x < 0:
        raise UsageError(f"isqrt определён для x >= 0, получено {x}")
    return int(gmpy2.isqrt(x))


def fib_from_lucas(n: int, lucas_value: int, counter: Optional[OpCounts] = None) -> int:
    """
    F_n по известному L_n: F_n = isqrt((L_n² - 4(-1)^n) / 5).

    Верно для всех n >= 0, включая n = 1, где формула с округлением ошибается.

    Args:
        n (int): Индекс, n >= 0.
        lucas_value (int): L_n.
        counter (OpCounts, optional): Счётчик; один квадрат и одно сложение.

    Returns:
        int: F_n.

    Raises:
        InconsistencyError: Если L_n² - 4(-1)^n не делится на 5
            или частное не является точным квадратом.
    """
    check_index(n)
    counter = ensure_counter(counter)
    sign = 1 if n % 2 == 0 else -1
    numerator = counted_square(lucas_value, counter) - 4 * sign
    counter.add_subs += 1

    quotient, remainder = divmod(numerator, 5)
    if remainder != 0 or quotient < 0:
        raise InconsistencyError(
            f"L_{n}² - 4(-1)^{n} не делится на 5: значение {lucas_value} не является L_{n}"
        )
    if not gmpy2.is_square(quotient):
        raise InconsistencyError(
            f"(L_{n}² - 4(-1)^{n}) / 5 не является точным квадратом: значение {lucas_value} не является L_{n}"
        )
    return isqrt(quotient)


def fib_rounding_formula(n: int, lucas_value: int) -> int:
    """
    F_n ≈ ⌈L_n / √5 - 0.5⌉ в двойной точности.

    Совпадает с точным результатом при 2 <= n <= 70, но даёт 0 при n = 1.

    Raises:
        OverflowError: Если L_n не помещается в float.
    """
    check_index(n)
    return int(math.ceil(float(lucas_value) / math.sqrt(5) - 0.5))
