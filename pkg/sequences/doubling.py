"""
Простое удвоение L_{2^e} формулой L_{2k} = L_k² - 2(-1)^k, начиная с L_1 = 1.
Покрывает только степени двойки; общий n требует тройки Middle.
"""

from typing import Optional

from metrics.counters import OpCounts, counted_square, ensure_counter
from sequences.bit_path import check_index


def lucas_power_of_two(exponent: int, counter: Optional[OpCounts] = None) -> int:
    """
    L_{2^exponent}.

    Args:
        exponent (int): Показатель, exponent >= 0.
        counter (OpCounts, optional): Счётчик; квадрат и вычитание на шаг.

    Returns:
        int: L_{2^exponent}.
    """
    check_index(exponent)
    counter = ensure_counter(counter)
    value = 1
    for step in range(exponent):
        # k = 2^step нечётно только на первом шаге
        sign = -1 if step == 0 else 1
        value = counted_square(value, counter) - 2 * sign
        counter.add_subs += 1
    return value
