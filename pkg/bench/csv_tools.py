"""
Модуль инструментов для записи результатов бенчмарка в CSV.
"""

import csv
import sys
from pathlib import Path
from typing import IO, Iterable, Union

sys.path.append(str(Path(__file__).resolve().parent.parent))
from bench.harness import BenchRecord
from config import CSV_HEADER
from utils import logger, BenchIOError


def write_csv(records: Iterable[BenchRecord], destination: Union[str, Path, IO[str]]) -> None:
    """
    Запись записей бенчмарка в CSV.

    Заголовок n,kind,algo,rep,elapsed_ns,squarings,mults,adds,calls,memo_hits,result_bits,
    затем по строке на запись; целые числа в десятичной записи, строки оканчиваются "\\n".

    Args:
        records (Iterable[BenchRecord]): Поток записей.
        destination (Union[str, Path, IO[str]]): Путь к файлу или открытый текстовый поток.

    Raises:
        BenchIOError: Если запись не удалась; содержит путь.
    """
    if isinstance(destination, (str, Path)):
        path = Path(destination)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline='') as f:
                rows = _write_rows(records, f)
        except OSError as e:
            raise BenchIOError(path, e) from e
        logger.info(f"Результаты бенчмарка ({rows} строк) сохранены в файл {path}")
        return

    name = getattr(destination, "name", "<поток>")
    try:
        rows = _write_rows(records, destination)
        destination.flush()
    except OSError as e:
        raise BenchIOError(name, e) from e
    logger.debug(f"Результаты бенчмарка ({rows} строк) записаны в {name}")


def _write_rows(records: Iterable[BenchRecord], stream: IO[str]) -> int:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    rows = 0
    for record in records:
        writer.writerow(record.csv_row())
        rows += 1
    return rows
