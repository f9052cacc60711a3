"""
Публичные обёртки lucas() и fibonacci(): таблица базовых значений и выбор алгоритма.
"""

from enum import Enum
from typing import Callable, Dict, Optional, Union

from metrics.counters import OpCounts, ensure_counter
from sequences.bit_path import check_index
from sequences.conversions import fib_from_lucas
from sequences.fast_doubling import fib_fast_doubling, lucas_from_fib, lucas_from_fib_single
from sequences.middle import lucas_middle
from sequences.oracle import fib_linear, lucas_linear
from sequences.ripple import lucas_ripple, lucas_ripple_memo
from utils import UsageError

# L_0 = 2, L_1 = 1
LUCAS_BASE = {0: 2, 1: 1}


class Algorithm(str, Enum):
    """Селектор алгоритма."""

    MIDDLE = "middle"
    RIPPLE = "ripple"
    RIPPLE_MEMO = "ripple-memo"
    LINEAR = "linear"
    VIA_FIB = "via-fib"
    FIB_DOUBLING = "fib-doubling"

    @classmethod
    def parse(cls, name: Union[str, "Algorithm"]) -> "Algorithm":
        """
        Разбор имени алгоритма; подчёркивания и дефисы равнозначны.

        Raises:
            UsageError: Если имя неизвестно.
        """
        if isinstance(name, cls):
            return name
        normalized = str(name).strip().lower().replace("_", "-")
        try:
            return cls(normalized)
        except ValueError:
            known = ", ".join(a.value for a in cls)
            raise UsageError(f"Неизвестный алгоритм '{name}'. Доступные: {known}") from None


class SequenceKind(str, Enum):
    """Вид последовательности."""

    LUCAS = "lucas"
    FIB = "fib"

    @classmethod
    def parse(cls, name: Union[str, "SequenceKind"]) -> "SequenceKind":
        """Разбор вида последовательности."""
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            raise UsageError(f"Неизвестный вид последовательности '{name}': ожидается lucas или fib") from None


LucasKernel = Callable[[int, OpCounts], int]

# Ядра для n >= 2
LUCAS_KERNELS: Dict[Algorithm, LucasKernel] = {
    Algorithm.MIDDLE: lucas_middle,
    Algorithm.RIPPLE: lucas_ripple,
    Algorithm.RIPPLE_MEMO: lucas_ripple_memo,
    Algorithm.LINEAR: lucas_linear,
    Algorithm.VIA_FIB: lucas_from_fib,
    Algorithm.FIB_DOUBLING: lucas_from_fib_single,
}

# Алгоритмы, для которых Фибоначчи считается через L_n и точное преобразование
LUCAS_FIRST = (Algorithm.MIDDLE, Algorithm.RIPPLE, Algorithm.RIPPLE_MEMO)

FIB_ALGORITHMS = (*LUCAS_FIRST, Algorithm.LINEAR, Algorithm.FIB_DOUBLING)


def algorithms_for(kind: Union[str, SequenceKind]) -> tuple:
    """Все селекторы, допустимые для данного вида последовательности."""
    if SequenceKind.parse(kind) is SequenceKind.FIB:
        return FIB_ALGORITHMS
    return tuple(Algorithm)


def lucas(n: int, algo: Union[str, Algorithm] = Algorithm.MIDDLE,
          counter: Optional[OpCounts] = None) -> int:
    """
    L_n выбранным алгоритмом.

    n = 0 и n = 1 берутся из таблицы базовых значений, поэтому любой селектор
    принимает любое n >= 0.

    Args:
        n (int): Индекс.
        algo (Union[str, Algorithm]): Селектор алгоритма.
        counter (OpCounts, optional): Счётчик операций.

    Returns:
        int: L_n.
    """
    algorithm = Algorithm.parse(algo)
    check_index(n)
    counter = ensure_counter(counter)
    if n in LUCAS_BASE:
        return LUCAS_BASE[n]
    return LUCAS_KERNELS[algorithm](n, counter)


def fibonacci(n: int, algo: Union[str, Algorithm] = Algorithm.MIDDLE,
              counter: Optional[OpCounts] = None) -> int:
    """
    F_n выбранным алгоритмом.

    Для middle, ripple и ripple-memo сначала считается L_n, затем точное
    преобразование; linear - линейный эталон; fib-doubling - прямой fast doubling.

    Raises:
        UsageError: Для селектора via-fib, который определён только для чисел Люка.
    """
    algorithm = Algorithm.parse(algo)
    check_index(n)
    counter = ensure_counter(counter)
    if algorithm in LUCAS_FIRST:
        return fib_from_lucas(n, lucas(n, algorithm, counter), counter)
    if algorithm is Algorithm.LINEAR:
        return fib_linear(n, counter)
    if algorithm is Algorithm.FIB_DOUBLING:
        return fib_fast_doubling(n, counter)[0]
    raise UsageError(f"Алгоритм '{algorithm.value}' не применим к числам Фибоначчи")


def compute(kind: Union[str, SequenceKind], n: int, algo: Union[str, Algorithm],
            counter: Optional[OpCounts] = None) -> int:
    """Вычисление L_n или F_n в зависимости от kind."""
    if SequenceKind.parse(kind) is SequenceKind.FIB:
        return fibonacci(n, algo, counter)
    return lucas(n, algo, counter)
