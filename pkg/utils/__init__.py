"""
Пакет утилит для проекта LucasToolkit.
Содержит модули для логирования и обработки ошибок.
"""

from utils.logger import (
    get_logger, debug, info, warning, error, critical, exception, trace, setLevel,
    configure_logging, log_computation, log_verification, log_bench_point
)
from utils.error_handler import (
    handle_exceptions, measure_execution_time,
    EXIT_OK, EXIT_FAILURE, EXIT_USAGE,
    LucasToolkitError, UsageError, IndexOverflowError, InconsistencyError,
    MismatchError, BenchIOError
)

__all__ = [
    # Логирование
    'get_logger', 'debug', 'info', 'warning', 'error', 'critical', 'exception', 'trace', 'setLevel',
    'configure_logging', 'log_computation', 'log_verification', 'log_bench_point',

    # Обработка ошибок
    'handle_exceptions', 'measure_execution_time',
    'EXIT_OK', 'EXIT_FAILURE', 'EXIT_USAGE',
    'LucasToolkitError', 'UsageError', 'IndexOverflowError', 'InconsistencyError',
    'MismatchError', 'BenchIOError',
]
