"""
Пакет метрик для проекта LucasToolkit.
Содержит счётчики операций и формулы ожидаемой стоимости алгоритмов.
"""

from metrics.counters import OpCounts, counted_square, counted_mul, ensure_counter
from metrics.predictors import (
    floor_lg, ripple_call_count, middle_expected_counts, fast_doubling_multiplications,
    ripple_memo_bound, average_multiplications_per_call
)

__all__ = [
    # Счётчики
    'OpCounts', 'counted_square', 'counted_mul', 'ensure_counter',

    # Предсказатели
    'floor_lg', 'ripple_call_count', 'middle_expected_counts', 'fast_doubling_multiplications',
    'ripple_memo_bound', 'average_multiplications_per_call',
]
