"""
Модуль для работы с индексами и битовым путём markOdd.
"""

import sys
from pathlib import Path
from typing import NamedTuple, Tuple

sys.path.append(str(Path(__file__).resolve().parent.parent))
from config import MAX_INDEX
from utils import UsageError, IndexOverflowError


def check_index(n: int, minimum: int = 0) -> int:
    """
    Проверка индекса: целое число в [minimum, MAX_INDEX].

    Args:
        n (int): Индекс.
        minimum (int): Минимально допустимое значение.

    Returns:
        int: Тот же индекс.

    Raises:
        UsageError: Если индекс не целый или меньше minimum.
        IndexOverflowError: Если индекс больше MAX_INDEX.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise UsageError(f"Индекс должен быть целым числом, получено {n!r}")
    if n > MAX_INDEX:
        raise IndexOverflowError(n, MAX_INDEX)
    if n < minimum:
        raise UsageError(f"Индекс должен быть не меньше {minimum}, получено {n}")
    return n


def checked_double_add(m: int, bit: int) -> int:
    """
    Вычисление 2m + bit с проверкой переполнения машинного слова.

    Raises:
        IndexOverflowError: Если результат больше MAX_INDEX.
    """
    result = 2 * m + bit
    if result > MAX_INDEX:
        raise IndexOverflowError(result, MAX_INDEX)
    return result


class MarkOddPath(NamedTuple):
    """
    Биты n ниже старшего, от старшего к младшему.

    bits хранится как кортеж длины N = ⌊lg n⌋; обращение bit(j) индексируется
    с единицы: bit(1) - бит сразу под старшим, bit(N) - младший бит n.
    Старший бит (всегда 1) не хранится.
    """

    length: int
    bits: Tuple[bool, ...]

    def bit(self, j: int) -> bool:
        """Флаг markOdd(j), 1 <= j <= N."""
        return self.bits[j - 1]

    def prefix(self, j: int) -> int:
        """Значение старшего бита и первых j флагов."""
        m = 1
        for flag in self.bits[:j]:
            m = checked_double_add(m, int(flag))
        return m

    def rebuild_index(self) -> int:
        """Восстановление n: m = 1; для j = 1..N m = 2m + bit(j)."""
        return self.prefix(self.length)


def mark_odd_bits(n: int) -> MarkOddPath:
    """
    Построение битового пути для n >= 2.

    i = n, j = N; на каждом шаге markOdd(j) = odd(i), i = i // 2, j = j - 1.
    После цикла i == 1, это отброшенный старший бит.

    Args:
        n (int): Индекс, n >= 2.

    Returns:
        MarkOddPath: Длина N и флаги.
    """
    check_index(n, minimum=2)
    length = n.bit_length() - 1
    flags = [False] * length
    i = n
    j = length
    while j > 0:
        if i & 1:
            flags[j - 1] = True
        i >>= 1
        j -= 1
    return MarkOddPath(length, tuple(flags))
