"""
Модуль команд командной строки: compute, verify и bench.

Коды завершения: 0 - успех, 1 - расхождение результатов, 2 - ошибка использования или ввода-вывода.
"""

import sys
import time
from pathlib import Path
from typing import Optional, Sequence

import gmpy2
from tqdm import tqdm

sys.path.append(str(Path(__file__).resolve().parent.parent))
from bench.csv_tools import write_csv
from bench.harness import BenchPlan, run_bench
from cli.parser import CliConfig, build_parser, config_from_args
from metrics.counters import OpCounts
from sequences.dispatch import SequenceKind, algorithms_for, compute
from sequences.oracle import iter_fib_linear, iter_lucas_linear
from utils import (
    logger, configure_logging, handle_exceptions, measure_execution_time,
    log_computation, log_verification, EXIT_FAILURE, EXIT_OK, UsageError
)


def format_number(value: int, radix: int) -> str:
    """
    Запись числа в системе счисления 10 или 16 (строчные цифры, без префикса).

    gmpy2 не ограничивает число цифр при переводе, в отличие от str(int).
    """
    return gmpy2.mpz(value).digits(radix)


@handle_exceptions
@measure_execution_time
def cmd_compute(config: CliConfig) -> int:
    """
    Вычисление одного числа.

    В stdout печатается только число (или количество его цифр при length_only);
    при stats в stderr печатается строка счётчиков key=value.

    Args:
        config (CliConfig): Конфигурация запуска.

    Returns:
        int: Код завершения.
    """
    if config.n is None:
        raise UsageError("Не задан индекс -n")

    counter = OpCounts()
    start_ns = time.perf_counter_ns()
    value = compute(config.kind, config.n, config.algo, counter)
    elapsed_ns = time.perf_counter_ns() - start_ns
    log_computation(config.kind.value, config.algo.value, config.n, counter.summary(), elapsed_ns)

    digits = format_number(value, config.radix)
    print(len(digits) if config.length_only else digits)
    if config.stats:
        print(counter.summary(), file=sys.stderr)
    return EXIT_OK


@handle_exceptions
@measure_execution_time
def cmd_verify(config: CliConfig) -> int:
    """
    Сверка всех селекторов с линейным эталоном для n = 0..verify_max.

    Args:
        config (CliConfig): Конфигурация запуска.

    Returns:
        int: 0 при полном совпадении, 1 при первом расхождении.
    """
    kind = config.kind
    algos = algorithms_for(kind)
    oracle = iter_fib_linear if kind is SequenceKind.FIB else iter_lucas_linear
    checked = 0

    values = tqdm(enumerate(oracle(config.verify_max)), total=config.verify_max + 1,
                  desc="verify", unit="n", file=sys.stderr, disable=None, leave=False)
    for n, expected in values:
        for algo in algos:
            got = compute(kind, n, algo)
            checked += 1
            if got != expected:
                log_verification(config.verify_max, checked, ok=False)
                print(
                    f"расхождение: n={n} algo={algo.value} "
                    f"expected={format_number(expected, 10)} got={format_number(got, 10)}"
                )
                return EXIT_FAILURE

    log_verification(config.verify_max, checked, ok=True)
    print(
        f"ok: {kind.value} n=0..{config.verify_max}, {len(algos)} алгоритмов, "
        f"{checked} сравнений без расхождений"
    )
    return EXIT_OK


@handle_exceptions
@measure_execution_time
def cmd_bench(config: CliConfig) -> int:
    """
    Прогон бенчмарка и запись CSV в файл или stdout.

    Args:
        config (CliConfig): Конфигурация запуска.

    Returns:
        int: Код завершения.
    """
    plan = BenchPlan.build(
        index_list=config.indices, algos=config.algos, kind=config.kind,
        reps=config.reps, warmup=config.warmup,
    )
    destination = config.csv_path if config.csv_path is not None else sys.stdout
    write_csv(run_bench(plan), destination)
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Точка входа командной строки.

    Args:
        argv (Sequence[str], optional): Аргументы без имени программы.

    Returns:
        int: Код завершения.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK

    run = handle_exceptions(config_from_args)
    config = run(args)
    if isinstance(config, int):
        return config

    configure_logging(config.verbosity, config.log_file)
    logger.debug(f"Запуск команды {config.subcommand}")
    return COMMANDS[config.subcommand](config)
