"""
Модуль для обработки ошибок в проекте.
Предоставляет иерархию исключений с кодами завершения и декораторы для команд CLI.
"""

import functools
import sys
import time
from pathlib import Path
from typing import Any, Optional, Union

# Импорт модуля логирования
sys.path.append(str(Path(__file__).resolve().parent.parent))
from utils import logger


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class LucasToolkitError(Exception):
    """Базовый класс для ошибок проекта."""
    exit_code = EXIT_FAILURE


class UsageError(LucasToolkitError):
    """Ошибка использования: неизвестный алгоритм, неверный индекс или план."""
    exit_code = EXIT_USAGE


class IndexOverflowError(UsageError):
    """Индекс вне диапазона машинного слова."""

    def __init__(self, value: int, limit: int):
        self.value = value
        self.limit = limit
        super().__init__(f"Индекс {value} выходит за пределы [0, {limit}]")


class InconsistencyError(LucasToolkitError):
    """Внутренняя несогласованность: входные данные повреждены."""
    exit_code = EXIT_FAILURE


class MismatchError(LucasToolkitError):
    """Расхождение результатов двух алгоритмов."""
    exit_code = EXIT_FAILURE

    def __init__(self, n: int, expected_algo: str, actual_algo: str,
                 expected: Optional[int] = None, actual: Optional[int] = None):
        self.n = n
        self.expected_algo = expected_algo
        self.actual_algo = actual_algo
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"Расхождение при n={n}: '{actual_algo}' не совпадает с '{expected_algo}'"
        )


class BenchIOError(LucasToolkitError):
    """Ошибка записи результатов бенчмарка."""
    exit_code = EXIT_USAGE

    def __init__(self, path: Union[str, Path], reason: Any):
        self.path = str(path)
        super().__init__(f"Не удалось записать результаты в {self.path}: {reason}")


def handle_exceptions(func):
    """
    Декоратор для обработки исключений в командах CLI.
    Логирует исключение, печатает однострочное сообщение в stderr
    и возвращает код завершения вместо проброса исключения.

    Args:
        func: Декорируемая функция, возвращающая код завершения.

    Returns:
        Функция-обертка, которая обрабатывает исключения.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except LucasToolkitError as e:
            logger.debug(f"Ошибка в функции {func.__name__}: {e!r}")
            print(f"ошибка: {e}", file=sys.stderr)
            return e.exit_code
        except OSError as e:
            logger.exception(f"Ошибка ввода-вывода в функции {func.__name__}: {e}")
            print(f"ошибка ввода-вывода: {e}", file=sys.stderr)
            return EXIT_USAGE
    return wrapper


def measure_execution_time(func):
    """
    Декоратор для измерения времени выполнения функции.

    Args:
        func: Декорируемая функция.

    Returns:
        Функция-обертка, которая измеряет время выполнения.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_ns = time.perf_counter_ns()
        try:
            return func(*args, **kwargs)
        finally:
            elapsed_ns = time.perf_counter_ns() - start_ns
            logger.debug(f"Функция {func.__name__} выполнена за {elapsed_ns / 1e9:.3f} секунд")
    return wrapper
