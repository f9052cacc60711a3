"""
Модуль бенчмарков: план запусков, записи замеров и последовательный прогон.

Замеры идут в одном потоке; время измеряется монотонными часами только вокруг
вызова алгоритма. Перед выдачей записей для очередного n результаты всех
алгоритмов сравниваются между собой.
"""

import sys
import time
from pathlib import Path
from typing import Iterator, List, Literal, Optional, Tuple

from pydantic import (
    BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, ValidationError,
    field_validator, model_validator
)
from tqdm import tqdm

sys.path.append(str(Path(__file__).resolve().parent.parent))
from config import DEFAULT_REPS, DEFAULT_WARMUP
from metrics.counters import OpCounts
from sequences.bit_path import check_index
from sequences.dispatch import Algorithm, SequenceKind, algorithms_for, compute
from utils import logger, log_bench_point, MismatchError, UsageError


class BenchRecord(BaseModel):
    """Один замер: индекс, алгоритм, время, счётчики и размер результата."""

    model_config = ConfigDict(frozen=True)

    n: NonNegativeInt
    kind: Literal["lucas", "fib"]
    algo: str
    rep: NonNegativeInt
    elapsed_ns: NonNegativeInt
    ops: OpCounts
    result_bits: NonNegativeInt

    def csv_row(self) -> Tuple[int, str, str, int, int, int, int, int, int, int, int]:
        """Поля в порядке заголовка CSV."""
        return (
            self.n, self.kind, self.algo, self.rep, self.elapsed_ns,
            self.ops.squarings, self.ops.general_mults, self.ops.add_subs,
            self.ops.recursive_calls, self.ops.memo_hits, self.result_bits,
        )


class BenchPlan(BaseModel):
    """
    План бенчмарка.

    index_list - непустой строго возрастающий список индексов;
    reps >= 1 замеров и warmup >= 0 прогревочных запусков на точку.
    """

    index_list: List[int] = Field(min_length=1)
    algos: List[Algorithm] = Field(min_length=1)
    kind: SequenceKind = SequenceKind.LUCAS
    reps: PositiveInt = DEFAULT_REPS
    warmup: NonNegativeInt = DEFAULT_WARMUP

    @field_validator("index_list")
    @classmethod
    def _check_indices(cls, value: List[int]) -> List[int]:
        for n in value:
            check_index(n)
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("индексы должны строго возрастать")
        return value

    @field_validator("algos", mode="before")
    @classmethod
    def _parse_algos(cls, value):
        return [Algorithm.parse(a) for a in value]

    @field_validator("kind", mode="before")
    @classmethod
    def _parse_kind(cls, value):
        return SequenceKind.parse(value)

    @model_validator(mode="after")
    def _check_algos_for_kind(self) -> "BenchPlan":
        allowed = algorithms_for(self.kind)
        for algo in self.algos:
            if algo not in allowed:
                raise ValueError(f"алгоритм '{algo.value}' не применим к виду '{self.kind.value}'")
        if len(set(self.algos)) != len(self.algos):
            raise ValueError("алгоритмы в плане не должны повторяться")
        return self

    @classmethod
    def build(cls, **fields) -> "BenchPlan":
        """
        Создание плана с переводом ошибок валидации в UsageError.

        Raises:
            UsageError: Если план нарушает инварианты.
        """
        try:
            return cls(**fields)
        except ValidationError as e:
            details = "; ".join(err["msg"] for err in e.errors())
            raise UsageError(f"Неверный план бенчмарка: {details}") from None


def geometric_indices(minimum: int, maximum: int, steps: int) -> List[int]:
    """
    Геометрический ряд индексов с округлением и удалением повторов.

    Концы ряда всегда входят в результат.

    Args:
        minimum (int): Первый индекс, >= 1.
        maximum (int): Последний индекс, >= minimum.
        steps (int): Число точек до удаления повторов, >= 2 (или 1 при minimum == maximum).

    Returns:
        List[int]: Строго возрастающий список индексов.

    Raises:
        UsageError: При неверных параметрах.
    """
    check_index(minimum, minimum=1)
    check_index(maximum)
    if maximum < minimum:
        raise UsageError(f"Геометрический ряд: max={maximum} меньше min={minimum}")
    if steps < 1 or (steps == 1 and minimum != maximum):
        raise UsageError(f"Геометрический ряд: нужно не меньше 2 точек, получено {steps}")
    if steps == 1:
        return [minimum]

    ratio = maximum / minimum
    points = {minimum, maximum}
    for i in range(1, steps - 1):
        points.add(min(maximum, max(minimum, round(minimum * ratio ** (i / (steps - 1))))))
    return sorted(points)


def _timed_call(plan: BenchPlan, n: int, algo: Algorithm) -> Tuple[int, int, OpCounts]:
    counter = OpCounts()
    start_ns = time.perf_counter_ns()
    value = compute(plan.kind, n, algo, counter)
    elapsed_ns = time.perf_counter_ns() - start_ns
    return value, elapsed_ns, counter


def run_bench(plan: BenchPlan) -> Iterator[BenchRecord]:
    """
    Прогон плана бенчмарка.

    Для каждой пары (n, алгоритм): warmup запусков без замера, затем reps замеров
    со свежими счётчиками. Записи выдаются в порядке n, затем алгоритм, затем номер замера.

    Args:
        plan (BenchPlan): План.

    Yields:
        BenchRecord: Записи замеров.

    Raises:
        MismatchError: Если алгоритмы дали разные значения для одного n.
    """
    kind = plan.kind.value
    logger.info(
        f"Бенчмарк {kind}: {len(plan.index_list)} индексов, алгоритмы "
        f"{', '.join(a.value for a in plan.algos)}, {plan.reps} замеров"
    )

    for n in tqdm(plan.index_list, desc="bench", unit="n", file=sys.stderr, disable=None, leave=False):
        records: List[BenchRecord] = []
        reference: Optional[Tuple[Algorithm, int]] = None

        for algo in plan.algos:
            log_bench_point(n, algo.value, plan.reps, plan.warmup)
            for _ in range(plan.warmup):
                compute(plan.kind, n, algo)

            for rep in range(plan.reps):
                value, elapsed_ns, counter = _timed_call(plan, n, algo)
                if reference is None:
                    reference = (algo, value)
                elif value != reference[1]:
                    raise MismatchError(n, reference[0].value, algo.value, reference[1], value)
                records.append(BenchRecord(
                    n=n, kind=kind, algo=algo.value, rep=rep, elapsed_ns=elapsed_ns,
                    ops=counter, result_bits=value.bit_length(),
                ))

        yield from records
