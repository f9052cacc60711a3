"""
Итеративный алгоритм Middle для чисел Люка.

Состояние цикла - тройка соседних значений (L_{2m}, L_{2m+1}, L_{2m+2})
для префикса m битов n, прочитанных от старшего. Каждая итерация удваивает
префикс формулами L_{2k} = L_k² - 2(-1)^k и L_{2k+2} = L_{k+1}² + 2(-1)^k.
"""

from typing import Callable, NamedTuple, Optional

from metrics.counters import OpCounts, counted_square, ensure_counter
from sequences.bit_path import check_index, checked_double_add, mark_odd_bits
from utils import logger
from utils.logger import TRACE


class LucasTriple(NamedTuple):
    """Три соседних числа Люка: low = L_{2m}, middle = L_{2m+1}, high = L_{2m+2}."""

    low: int
    middle: int
    high: int


# (L_2, L_3, L_4) - тройка для префикса m = 1 (только старший бит)
INITIAL_TRIPLE = LucasTriple(3, 4, 7)

TripleObserver = Callable[[int, LucasTriple], None]


def lucas_middle(
    n: int,
    counter: Optional[OpCounts] = None,
    *,
    initial_triple: Optional[LucasTriple] = None,
    observer: Optional[TripleObserver] = None,
) -> int:
    """
    L_n алгоритмом Middle.

    Для j = 1..N-1: p = 1; если markOdd(j), то сдвиг LL <- LM, LM <- LH и p = -1;
    затем LL <- LL² - 2p, LH <- LM² + 2p, LM <- LH - LL.
    В конце, если markOdd(N), LL <- LM.

    Args:
        n (int): Индекс, n >= 2 (n = 0 и n = 1 обрабатывает обёртка lucas()).
        counter (OpCounts, optional): Счётчик; на итерацию 2 квадрата и 3 сложения.
        initial_triple (LucasTriple, optional): Начальная тройка, по умолчанию (3, 4, 7).
        observer (TripleObserver, optional): Вызывается с (m, тройка) после
            инициализации и после каждой итерации.

    Returns:
        int: L_n.
    """
    check_index(n, minimum=2)
    counter = ensure_counter(counter)
    path = mark_odd_bits(n)
    low, middle, high = initial_triple or INITIAL_TRIPLE
    tracing = logger.isEnabledFor(TRACE)

    m = 1
    if observer is not None:
        observer(m, LucasTriple(low, middle, high))

    for j in range(1, path.length):
        p = 1
        if path.bit(j):
            low, middle = middle, high
            p = -1
        low = counted_square(low, counter) - 2 * p
        high = counted_square(middle, counter) + 2 * p
        middle = high - low
        counter.add_subs += 3

        m = checked_double_add(m, int(path.bit(j)))
        if tracing:
            logger.trace(f"Middle n={n}: шаг {j}, префикс m={m}, p={p}")
        if observer is not None:
            observer(m, LucasTriple(low, middle, high))

    if path.bit(path.length):
        low = middle
    return low
