"""
Модуль предсказателей стоимости алгоритмов.
Независимые от вычислений формулы, с которыми сверяются инструментированные запуски.
"""

from typing import Dict

from metrics.counters import OpCounts
from utils import UsageError


def floor_lg(n: int) -> int:
    """Целая часть двоичного логарифма для n >= 1."""
    return n.bit_length() - 1


def ripple_call_count(n: int) -> int:
    """
    Число вызовов наивного Ripple без мемоизации.

    Рекуррентность: f(2) = f(3) = f(4) = 1; для чётного n f(n) = 1 + f(n/2);
    для нечётного n f(n) = 1 + f(⌊n/2⌋) + f(⌈n/2⌉).
    На n = 2^k - 1 получается k(k-1)/2, то есть Θ(log² n), а не O(log n).

    Args:
        n (int): Индекс, n >= 2.

    Returns:
        int: Количество вызовов.

    Raises:
        UsageError: Если n < 2.
    """
    if n < 2:
        raise UsageError(f"Ripple определён для n >= 2, получено {n}")
    return _ripple_calls(n, {})


def _ripple_calls(n: int, memo: Dict[int, int]) -> int:
    if n <= 4:
        return 1
    if n not in memo:
        half = n // 2
        if n % 2 == 0:
            memo[n] = 1 + _ripple_calls(half, memo)
        else:
            memo[n] = 1 + _ripple_calls(half, memo) + _ripple_calls(half + 1, memo)
    return memo[n]


def middle_expected_counts(n: int) -> OpCounts:
    """
    Ожидаемые счётчики Middle: по 2 квадрата и 3 сложения на итерацию,
    итераций ⌊lg n⌋ - 1.

    Args:
        n (int): Индекс, n >= 2.

    Returns:
        OpCounts: Ожидаемые счётчики.
    """
    if n < 2:
        raise UsageError(f"Middle определён для n >= 2, получено {n}")
    iterations = max(floor_lg(n) - 1, 0)
    return OpCounts(squarings=2 * iterations, add_subs=3 * iterations)


def fast_doubling_multiplications(n: int) -> int:
    """
    Ожидаемое число больших умножений базового fast doubling:
    одно общее умножение и два квадрата на каждый бит n.

    Args:
        n (int): Индекс, n >= 0.

    Returns:
        int: squarings + general_mults.
    """
    return 3 * n.bit_length()


def ripple_memo_bound(n: int) -> int:
    """
    Верхняя граница свежих вычислений мемоизированного Ripple: 2⌊lg n⌋ + 1.
    На каждой глубине рекурсии встречаются не более двух соседних индексов {k, k+1}.

    Args:
        n (int): Индекс, n >= 2.

    Returns:
        int: Граница.
    """
    if n < 2:
        raise UsageError(f"Ripple определён для n >= 2, получено {n}")
    return 2 * floor_lg(n) + 1


def average_multiplications_per_call(counter: OpCounts) -> float:
    """
    Среднее число квадратов на один вызов Ripple, включая попадания в кэш.

    Args:
        counter (OpCounts): Счётчики после запуска Ripple.

    Returns:
        float: squarings / recursive_calls (0.0, если вызовов не было).
    """
    if counter.recursive_calls == 0:
        return 0.0
    return counter.squarings / counter.recursive_calls
