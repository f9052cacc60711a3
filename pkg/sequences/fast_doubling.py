"""
Базовый алгоритм fast doubling для чисел Фибоначчи и маршруты L_n через F_n.

F_{2k} = F_k(2F_{k+1} - F_k), F_{2k+1} = F_k² + F_{k+1}²; биты n читаются от старшего.
В отличие от Middle здесь есть общее умножение, поэтому счётчик различает
квадраты и общие умножения.
"""

from typing import Optional, Tuple

from metrics.counters import OpCounts, counted_mul, counted_square, ensure_counter
from sequences.bit_path import check_index
from utils import UsageError


def fib_fast_doubling(n: int, counter: Optional[OpCounts] = None) -> Tuple[int, int]:
    """
    Пара (F_n, F_{n+1}).

    Args:
        n (int): Индекс, n >= 0.
        counter (OpCounts, optional): Счётчик операций.

    Returns:
        Tuple[int, int]: (F_n, F_{n+1}).
    """
    check_index(n)
    counter = ensure_counter(counter)
    a, b = 0, 1
    for shift in range(n.bit_length() - 1, -1, -1):
        c = counted_mul(a, 2 * b - a, counter)
        d = counted_square(a, counter) + counted_square(b, counter)
        counter.add_subs += 2
        if (n >> shift) & 1:
            a, b = d, c + d
            counter.add_subs += 1
        else:
            a, b = c, d
    return a, b


def lucas_from_fib(n: int, counter: Optional[OpCounts] = None) -> int:
    """
    L_n = F_{n-1} + F_{n+1} двумя внешними вызовами fast doubling.

    Args:
        n (int): Индекс, n >= 1 (L_0 = 2 возвращает обёртка lucas()).
        counter (OpCounts, optional): Счётчик операций.

    Returns:
        int: L_n.

    Raises:
        UsageError: Если n = 0 (F_{-1} не моделируется).
    """
    check_index(n)
    if n == 0:
        raise UsageError("lucas_from_fib определён для n >= 1: F_{-1} не поддерживается")
    counter = ensure_counter(counter)
    before, _ = fib_fast_doubling(n - 1, counter)
    after, _ = fib_fast_doubling(n + 1, counter)
    counter.add_subs += 1
    return before + after


def lucas_from_fib_single(n: int, counter: Optional[OpCounts] = None) -> int:
    """
    L_n = 2F_{n+1} - F_n одним вызовом fast doubling.

    Args:
        n (int): Индекс, n >= 0.
        counter (OpCounts, optional): Счётчик операций.

    Returns:
        int: L_n.
    """
    check_index(n)
    counter = ensure_counter(counter)
    fib_n, fib_next = fib_fast_doubling(n, counter)
    counter.add_subs += 1
    return 2 * fib_next - fib_n
