"""
Пакет бенчмарков для проекта LucasToolkit.
Содержит план и прогон замеров и запись результатов в CSV.
"""

from bench.harness import BenchPlan, BenchRecord, geometric_indices, run_bench
from bench.csv_tools import write_csv

__all__ = [
    'BenchPlan', 'BenchRecord', 'geometric_indices', 'run_bench',
    'write_csv',
]
