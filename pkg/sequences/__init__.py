"""
Пакет последовательностей для проекта LucasToolkit.
Содержит линейные эталоны, алгоритмы Middle и Ripple, базовый fast doubling
и преобразования между числами Люка и Фибоначчи.
"""

from sequences.bit_path import MarkOddPath, mark_odd_bits, check_index, checked_double_add
from sequences.oracle import (
    lucas_linear, fib_linear, iter_lucas_linear, iter_fib_linear
)
from sequences.middle import LucasTriple, INITIAL_TRIPLE, lucas_middle
from sequences.ripple import lucas_ripple, lucas_ripple_memo
from sequences.fast_doubling import fib_fast_doubling, lucas_from_fib, lucas_from_fib_single
from sequences.conversions import isqrt, fib_from_lucas, fib_rounding_formula
from sequences.doubling import lucas_power_of_two
from sequences.dispatch import (
    Algorithm, SequenceKind, LUCAS_BASE, algorithms_for, lucas, fibonacci, compute
)

__all__ = [
    # Индексы и битовый путь
    'MarkOddPath', 'mark_odd_bits', 'check_index', 'checked_double_add',

    # Эталоны
    'lucas_linear', 'fib_linear', 'iter_lucas_linear', 'iter_fib_linear',

    # Алгоритмы
    'LucasTriple', 'INITIAL_TRIPLE', 'lucas_middle',
    'lucas_ripple', 'lucas_ripple_memo',
    'fib_fast_doubling', 'lucas_from_fib', 'lucas_from_fib_single',
    'lucas_power_of_two',

    # Преобразования
    'isqrt', 'fib_from_lucas', 'fib_rounding_formula',

    # Публичные обёртки
    'Algorithm', 'SequenceKind', 'LUCAS_BASE', 'algorithms_for', 'lucas', 'fibonacci', 'compute',
]
