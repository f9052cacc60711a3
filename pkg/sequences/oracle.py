"""
Модуль линейных эталонов.
O(n) сложений по определению последовательностей; используется только для проверки.
"""

from typing import Iterator, Optional

from metrics.counters import OpCounts, ensure_counter
from sequences.bit_path import check_index

LUCAS_START = (2, 1)  # L_0, L_1
FIB_START = (0, 1)  # F_0, F_1


def _linear(n: int, start, counter: OpCounts) -> int:
    a, b = start
    for _ in range(n):
        a, b = b, a + b
    counter.add_subs += n
    return a


def lucas_linear(n: int, counter: Optional[OpCounts] = None) -> int:
    """
    L_n по рекуррентности L_n = L_{n-1} + L_{n-2}, L_0 = 2, L_1 = 1.

    Args:
        n (int): Индекс, n >= 0.
        counter (OpCounts, optional): Счётчик операций.

    Returns:
        int: L_n.
    """
    check_index(n)
    return _linear(n, LUCAS_START, ensure_counter(counter))


def fib_linear(n: int, counter: Optional[OpCounts] = None) -> int:
    """
    F_n по рекуррентности F_n = F_{n-1} + F_{n-2}, F_0 = 0, F_1 = 1.

    Args:
        n (int): Индекс, n >= 0.
        counter (OpCounts, optional): Счётчик операций.

    Returns:
        int: F_n.
    """
    check_index(n)
    return _linear(n, FIB_START, ensure_counter(counter))


def iter_lucas_linear(limit: int) -> Iterator[int]:
    """Последовательно L_0, L_1, ..., L_limit."""
    a, b = LUCAS_START
    for _ in range(limit + 1):
        yield a
        a, b = b, a + b


def iter_fib_linear(limit: int) -> Iterator[int]:
    """Последовательно F_0, F_1, ..., F_limit."""
    a, b = FIB_START
    for _ in range(limit + 1):
        yield a
        a, b = b, a + b
