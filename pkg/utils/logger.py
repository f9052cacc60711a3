"""
Модуль для настройки системы логирования проекта.
Обеспечивает единый интерфейс для логирования во всех компонентах системы.

Консольный вывод идёт в stderr: stdout зарезервирован под результат вычислений.
"""

import logging
import sys
import threading
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional, Union

from colorama import Fore, Back, Style, just_fix_windows_console

# Импорт конфигурации
sys.path.append(str(Path(__file__).resolve().parent.parent))
from config import LOG_LEVEL, LOG_FORMAT, LOG_MAX_BYTES, LOG_BACKUP_COUNT


# Константы для уровней логирования
TRACE = 5  # Добавляем уровень TRACE (ниже DEBUG)
logging.addLevelName(TRACE, "TRACE")

ROOT_LOGGER_NAME = "lucas_toolkit"

# Соответствие числа флагов -v уровню логирования
VERBOSITY_LEVELS = {
    0: LOG_LEVEL,
    1: logging.INFO,
    2: logging.DEBUG,
}


class CustomFormatter(logging.Formatter):
    """
    Пользовательский форматтер для логов.
    Добавляет информацию о потоке и цветовое форматирование для консоли.
    """

    # Цвета для разных уровней логирования (для консоли)
    COLORS = {
        'TRACE': Style.DIM + Fore.WHITE,
        'DEBUG': Fore.CYAN,
        'INFO': Fore.GREEN,
        'WARNING': Fore.YELLOW,
        'ERROR': Fore.RED,
        'CRITICAL': Back.RED,
    }

    def __init__(self, fmt=None, datefmt=None, style='%', use_colors=False):
        """
        Инициализация форматтера.

        Args:
            fmt (str, optional): Формат сообщения.
            datefmt (str, optional): Формат даты.
            style (str, optional): Стиль форматирования.
            use_colors (bool, optional): Использовать цветовое форматирование.
        """
        super().__init__(fmt, datefmt, style)
        self.use_colors = use_colors

    def format(self, record):
        """
        Форматирование записи.

        Args:
            record: Запись логирования.

        Returns:
            str: Отформатированное сообщение.
        """
        record.threadName = threading.current_thread().name
        message = super().format(record)

        if self.use_colors and record.levelname in self.COLORS:
            message = f"{self.COLORS[record.levelname]}{message}{Style.RESET_ALL}"

        return message


def setup_logger(name: Optional[str] = None, level: Optional[int] = None) -> logging.Logger:
    """
    Настройка и получение логгера.

    Дочерние логгеры не получают собственных обработчиков: записи поднимаются
    к корневому логгеру проекта.

    Args:
        name (str, optional): Имя логгера. По умолчанию None (корневой логгер проекта).
        level (int, optional): Уровень логирования. По умолчанию None (из конфигурации).

    Returns:
        logging.Logger: Настроенный логгер.
    """
    if name is None or name == ROOT_LOGGER_NAME:
        logger = logging.getLogger(ROOT_LOGGER_NAME)
    else:
        logger = logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")
        if level is not None:
            logger.setLevel(level)
        return logger

    logger.setLevel(level or LOG_LEVEL)
    logger.propagate = False

    # Если обработчики уже добавлены, не добавляем новые
    if logger.handlers:
        return logger

    just_fix_windows_console()
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(CustomFormatter(LOG_FORMAT, use_colors=sys.stderr.isatty()))
    logger.addHandler(console_handler)

    return logger


def attach_file_handler(log_file: Union[str, Path]) -> RotatingFileHandler:
    """
    Подключение записи логов в файл с ротацией по размеру.

    Args:
        log_file (Union[str, Path]): Путь к лог-файлу.

    Returns:
        RotatingFileHandler: Подключённый обработчик.
    """
    log_path = Path(log_file)
    log_path.parent.mkdir(parents=True, exist_ok=True)

    for handler in root_logger.handlers:
        if isinstance(handler, RotatingFileHandler) and Path(handler.baseFilename) == log_path.resolve():
            return handler

    file_handler = RotatingFileHandler(
        log_path, maxBytes=LOG_MAX_BYTES, backupCount=LOG_BACKUP_COUNT, encoding='utf-8'
    )
    file_handler.setFormatter(CustomFormatter(LOG_FORMAT))
    root_logger.addHandler(file_handler)
    return file_handler


def configure_logging(verbosity: int = 0, log_file: Optional[Union[str, Path]] = None) -> logging.Logger:
    """
    Настройка уровня логирования по числу флагов -v и, при необходимости, файла логов.

    Args:
        verbosity (int): Количество флагов -v (0 - WARNING, 1 - INFO, 2 - DEBUG, 3+ - TRACE).
        log_file (Union[str, Path], optional): Путь к лог-файлу.

    Returns:
        logging.Logger: Корневой логгер проекта.
    """
    level = VERBOSITY_LEVELS.get(verbosity, TRACE)
    root_logger.setLevel(level)
    if log_file is not None:
        attach_file_handler(log_file)
    return root_logger


# Создание корневого логгера при импорте модуля
root_logger = setup_logger()


def get_logger(name=None):
    """
    Получение логгера с заданным именем.

    Args:
        name (str, optional): Имя логгера. По умолчанию None (корневой логгер).

    Returns:
        logging.Logger: Логгер с заданным именем.
    """
    if name is None:
        return root_logger

    return setup_logger(name)


def isEnabledFor(level):
    """Проверка, будет ли записано сообщение данного уровня."""
    return root_logger.isEnabledFor(level)


def trace(msg, *args, **kwargs):
    """Логирование сообщения с уровнем TRACE."""
    root_logger.log(TRACE, msg, *args, **kwargs)


# Функции-обертки для удобства использования
def debug(msg, *args, **kwargs):
    """Логирование сообщения с уровнем DEBUG."""
    root_logger.debug(msg, *args, **kwargs)


def info(msg, *args, **kwargs):
    """Логирование сообщения с уровнем INFO."""
    root_logger.info(msg, *args, **kwargs)


def warning(msg, *args, **kwargs):
    """Логирование сообщения с уровнем WARNING."""
    root_logger.warning(msg, *args, **kwargs)


def error(msg, *args, **kwargs):
    """Логирование сообщения с уровнем ERROR."""
    root_logger.error(msg, *args, **kwargs)


def critical(msg, *args, **kwargs):
    """Логирование сообщения с уровнем CRITICAL."""
    root_logger.critical(msg, *args, **kwargs)


def exception(msg, *args, exc_info=True, **kwargs):
    """Логирование исключения с трассировкой стека."""
    root_logger.exception(msg, *args, exc_info=exc_info, **kwargs)


def setLevel(level):
    """
    Установка уровня логирования для корневого логгера.

    Args:
        level: Уровень логирования (например, logging.DEBUG, logging.INFO и т.д.).
    """
    root_logger.setLevel(level)


# Специальные функции логирования для проекта LucasToolkit
def log_computation(kind: str, algo: str, n: int, summary: str, elapsed_ns: int):
    """
    Логирование одного вычисления числа последовательности.

    Args:
        kind (str): Вид последовательности (lucas или fib).
        algo (str): Имя алгоритма.
        n (int): Индекс.
        summary (str): Сводка счётчиков операций.
        elapsed_ns (int): Время вычисления в наносекундах.
    """
    info(f"Вычислено {kind}({n}) алгоритмом '{algo}' за {elapsed_ns / 1e6:.3f} мс: {summary}")


def log_verification(max_index: int, checked: int, ok: bool):
    """
    Логирование итога проверки алгоритмов против эталона.

    Args:
        max_index (int): Максимальный проверенный индекс.
        checked (int): Количество выполненных сравнений.
        ok (bool): Совпали ли все результаты.
    """
    if ok:
        info(f"Проверка до n={max_index} пройдена: {checked} сравнений без расхождений")
    else:
        error(f"Проверка до n={max_index} провалена после {checked} сравнений")


def log_bench_point(n: int, algo: str, reps: int, warmup: int):
    """
    Логирование запуска одной точки бенчмарка.

    Args:
        n (int): Индекс.
        algo (str): Имя алгоритма.
        reps (int): Количество замеров.
        warmup (int): Количество прогревочных запусков.
    """
    debug(f"Бенчмарк n={n}, алгоритм '{algo}': {warmup} прогревочных и {reps} замеров")
