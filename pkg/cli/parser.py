"""
Модуль разбора командной строки.
Строит argparse-парсер с подкомандами compute, verify и bench
и переводит результат разбора в проверенную конфигурацию CliConfig.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt, ValidationError

sys.path.append(str(Path(__file__).resolve().parent.parent))
from config import (
    DEFAULT_BENCH_ALGOS, DEFAULT_REPS, DEFAULT_WARMUP, LOG_FILE, SUPPORTED_RADIXES, VERIFY_DEFAULT_MAX
)
from bench.harness import geometric_indices
from sequences.bit_path import check_index
from sequences.dispatch import Algorithm, SequenceKind
from utils import UsageError


class CliConfig(BaseModel):
    """Проверенная конфигурация одного запуска."""

    model_config = ConfigDict(frozen=True)

    subcommand: Literal["compute", "verify", "bench"]
    verbosity: NonNegativeInt = 0
    log_file: Optional[Path] = None

    # compute
    n: Optional[NonNegativeInt] = None
    kind: SequenceKind = SequenceKind.LUCAS
    algo: Algorithm = Algorithm.MIDDLE
    radix: Literal[10, 16] = 10
    stats: bool = False
    length_only: bool = False

    # verify
    verify_max: NonNegativeInt = VERIFY_DEFAULT_MAX

    # bench
    indices: List[int] = []
    algos: List[Algorithm] = []
    reps: PositiveInt = DEFAULT_REPS
    warmup: NonNegativeInt = DEFAULT_WARMUP
    csv_path: Optional[Path] = None


def _split_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def parse_index_list(text: str) -> List[int]:
    """
    Разбор списка индексов через запятую.

    Raises:
        UsageError: Если элемент не является целым числом.
    """
    try:
        return [int(part) for part in _split_list(text)]
    except ValueError:
        raise UsageError(f"Неверный список индексов: '{text}'") from None


def parse_geometric(text: str) -> List[int]:
    """
    Разбор описания геометрического ряда min:max:steps.

    Raises:
        UsageError: Если описание имеет неверный формат.
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"Геометрический ряд задаётся как min:max:steps, получено '{text}'")
    try:
        minimum, maximum, steps = (int(p) for p in parts)
    except ValueError:
        raise UsageError(f"Геометрический ряд задаётся целыми числами, получено '{text}'") from None
    return geometric_indices(minimum, maximum, steps)


def build_parser() -> argparse.ArgumentParser:
    """
    Создание парсера аргументов.

    Returns:
        argparse.ArgumentParser: Парсер с подкомандами.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="подробнее логировать в stderr (можно повторять)")
    common.add_argument("--log-file", type=Path, nargs="?", const=LOG_FILE, default=None,
                        help=f"дополнительно писать лог в файл (без пути - {LOG_FILE.name} в logs/)")

    kinds = [k.value for k in SequenceKind]

    parser = argparse.ArgumentParser(
        prog="lucas",
        description="Числа Люка и Фибоначчи за O(log n) операций: алгоритмы Middle и Ripple.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True, metavar="{compute,verify,bench}")

    compute = subparsers.add_parser("compute", parents=[common], help="вычислить одно число")
    compute.add_argument("-n", "--n", type=int, required=True, help="индекс")
    compute.add_argument("--kind", choices=kinds, default=SequenceKind.LUCAS.value)
    compute.add_argument("--algo", default=Algorithm.MIDDLE.value,
                         help=f"алгоритм: {', '.join(a.value for a in Algorithm)}")
    compute.add_argument("--radix", type=int, choices=SUPPORTED_RADIXES, default=10)
    compute.add_argument("--stats", action="store_true", help="вывести счётчики операций в stderr")
    compute.add_argument("--length-only", action="store_true", help="вывести только количество цифр")

    verify = subparsers.add_parser("verify", parents=[common], help="сверить все алгоритмы с эталоном")
    verify.add_argument("--max", dest="verify_max", type=int, default=VERIFY_DEFAULT_MAX,
                        help="максимальный проверяемый индекс")
    verify.add_argument("--kind", choices=kinds, default=SequenceKind.LUCAS.value)

    bench = subparsers.add_parser("bench", parents=[common], help="замерить время и счётчики операций")
    series = bench.add_mutually_exclusive_group(required=True)
    series.add_argument("--indices", help="индексы через запятую")
    series.add_argument("--geometric", help="геометрический ряд min:max:steps")
    bench.add_argument("--algos", default=",".join(DEFAULT_BENCH_ALGOS), help="алгоритмы через запятую")
    bench.add_argument("--kind", choices=kinds, default=SequenceKind.LUCAS.value)
    bench.add_argument("--reps", type=int, default=DEFAULT_REPS)
    bench.add_argument("--warmup", type=int, default=DEFAULT_WARMUP)
    bench.add_argument("--csv", dest="csv_path", type=Path, default=None,
                       help="файл для CSV (по умолчанию stdout)")

    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    """
    Перевод результата argparse в CliConfig.

    Args:
        args (argparse.Namespace): Результат разбора.

    Returns:
        CliConfig: Проверенная конфигурация.

    Raises:
        UsageError: Если значения флагов нарушают инварианты.
    """
    fields = {
        "subcommand": args.subcommand,
        "verbosity": args.verbose,
        "log_file": args.log_file,
        "kind": SequenceKind.parse(args.kind),
    }

    if args.subcommand == "compute":
        fields.update(
            n=args.n, algo=Algorithm.parse(args.algo), radix=args.radix,
            stats=args.stats, length_only=args.length_only,
        )
    elif args.subcommand == "verify":
        fields.update(verify_max=check_index(args.verify_max))
    else:
        indices = parse_index_list(args.indices) if args.indices else parse_geometric(args.geometric)
        fields.update(
            indices=indices, algos=[Algorithm.parse(a) for a in _split_list(args.algos)],
            reps=args.reps, warmup=args.warmup, csv_path=args.csv_path,
        )

    try:
        return CliConfig(**fields)
    except ValidationError as e:
        details = "; ".join(f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors())
        raise UsageError(f"Неверные параметры: {details}") from None

