"""
Рекурсивный алгоритм Ripple для чисел Люка.

Чётный n требует одного рекурсивного вызова, нечётный - двух
(на ⌊n/2⌋ и ⌈n/2⌉). Без мемоизации число вызовов растёт как Θ(log² n);
мемоизированный вариант вычисляет каждый индекс один раз и укладывается в O(log n).
"""

from typing import Dict, Optional

from metrics.counters import OpCounts, counted_square, ensure_counter
from sequences.bit_path import check_index

# Базовые значения рекурсии
RIPPLE_BASE = {2: 3, 3: 4, 4: 7}


def _sign(half: int) -> int:
    """p = +1, если ⌊n/2⌋ чётно, иначе -1."""
    return 1 if half % 2 == 0 else -1


def lucas_ripple(n: int, counter: Optional[OpCounts] = None) -> int:
    """
    L_n наивным Ripple, в точности как записано: без запоминания повторных вызовов.

    Args:
        n (int): Индекс, n >= 2.
        counter (OpCounts, optional): Счётчик вызовов, квадратов и сложений.

    Returns:
        int: L_n.
    """
    check_index(n, minimum=2)
    return _ripple(n, ensure_counter(counter))


def _ripple(n: int, counter: OpCounts) -> int:
    counter.recursive_calls += 1
    if n in RIPPLE_BASE:
        return RIPPLE_BASE[n]

    half = n // 2
    p = _sign(half)
    low = _ripple(half, counter)
    if n % 2 == 0:
        counter.add_subs += 1
        return counted_square(low, counter) - 2 * p

    high = _ripple(n - half, counter)
    counter.add_subs += 2
    return counted_square(high, counter) - counted_square(low, counter) + 4 * p


def lucas_ripple_memo(n: int, counter: Optional[OpCounts] = None) -> int:
    """
    L_n мемоизированным Ripple.

    Таблица запоминания создаётся на каждый вызов и не разделяется между потоками.
    recursive_calls учитывает все вызовы, memo_hits - ответы из таблицы.

    Args:
        n (int): Индекс, n >= 2.
        counter (OpCounts, optional): Счётчик операций.

    Returns:
        int: L_n.
    """
    check_index(n, minimum=2)
    return _ripple_memo(n, ensure_counter(counter), {})


def _ripple_memo(n: int, counter: OpCounts, memo: Dict[int, int]) -> int:
    counter.recursive_calls += 1
    if n in memo:
        counter.memo_hits += 1
        return memo[n]
    if n in RIPPLE_BASE:
        memo[n] = RIPPLE_BASE[n]
        return memo[n]

    half = n // 2
    p = _sign(half)
    low = _ripple_memo(half, counter, memo)
    if n % 2 == 0:
        counter.add_subs += 1
        value = counted_square(low, counter) - 2 * p
    else:
        high = _ripple_memo(n - half, counter, memo)
        counter.add_subs += 2
        value = counted_square(high, counter) - counted_square(low, counter) + 4 * p

    memo[n] = value
    return value
