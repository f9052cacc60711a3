"""
Конфигурационный файл для проекта LucasToolkit.
Содержит пути, параметры логирования, ограничения на индексы и настройки бенчмарков.

Переменные окружения не используются: всё, что меняется между запусками,
передаётся флагами командной строки.
"""

import logging
from pathlib import Path

# Базовые пути
BASE_DIR = Path(__file__).resolve().parent
LOGS_DIR = BASE_DIR / "logs"

# Настройки логирования
LOG_LEVEL = logging.WARNING  # stdout и stderr должны оставаться чистыми для конвейеров
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_FILE = LOGS_DIR / "lucas_toolkit.log"  # путь для --log-file без аргумента
LOG_MAX_BYTES = 10 * 1024 * 1024  # 10 МБ
LOG_BACKUP_COUNT = 5

# Ограничения на индексы (машинное слово без знака)
INDEX_BITS = 64
MAX_INDEX = 2 ** INDEX_BITS - 1

# Системы счисления для вывода
SUPPORTED_RADIXES = (10, 16)

# Настройки проверки
VERIFY_DEFAULT_MAX = 512

# Настройки бенчмарков
DEFAULT_REPS = 3
DEFAULT_WARMUP = 1
DEFAULT_BENCH_ALGOS = ("middle", "ripple-memo", "fib-doubling")
CSV_HEADER = (
    "n", "kind", "algo", "rep", "elapsed_ns",
    "squarings", "mults", "adds", "calls", "memo_hits", "result_bits",
)
