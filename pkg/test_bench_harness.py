#!/usr/bin/env python3
"""
Тесты бенчмарка: план, прогон, проверка согласия алгоритмов и запись CSV.
"""

import io
import sys
from pathlib import Path

import pytest

# Добавляем путь к проекту
sys.path.append(str(Path(__file__).resolve().parent))

from bench import BenchPlan, BenchRecord, geometric_indices, run_bench, write_csv
from config import CSV_HEADER, MAX_INDEX
from metrics import OpCounts
from sequences import LucasTriple
from utils import BenchIOError, IndexOverflowError, MismatchError, UsageError

HEADER_LINE = "n,kind,algo,rep,elapsed_ns,squarings,mults,adds,calls,memo_hits,result_bits"


def test_two_algorithms_single_index():
    plan = BenchPlan.build(index_list=[10], algos=["middle", "linear"], kind="lucas", reps=1, warmup=0)
    records = list(run_bench(plan))
    assert len(records) == 2
    assert [r.algo for r in records] == ["middle", "linear"]
    assert all(r.result_bits == 7 for r in records)


def test_reps_at_index_two():
    plan = BenchPlan.build(index_list=[2], algos=["middle"], reps=3, warmup=1)
    records = list(run_bench(plan))
    assert len(records) == 3
    assert [r.rep for r in records] == [0, 1, 2]
    assert all(r.ops.squarings == 0 for r in records)


def test_middle_has_no_general_multiplications():
    plan = BenchPlan.build(index_list=[2 ** 20], algos=["middle", "fib-doubling"], reps=1, warmup=0)
    middle, baseline = list(run_bench(plan))
    assert middle.ops.general_mults == 0
    assert baseline.ops.general_mults > 0
    assert middle.result_bits == baseline.result_bits


def test_records_are_ordered_and_consistent():
    plan = BenchPlan.build(index_list=[5, 64, 1000], algos=["ripple", "middle"], reps=2, warmup=0)
    records = list(run_bench(plan))
    assert len(records) == 3 * 2 * 2
    assert [(r.n, r.algo, r.rep) for r in records] == [
        (n, algo, rep) for n in (5, 64, 1000) for algo in ("ripple", "middle") for rep in (0, 1)
    ]
    for n in (5, 64, 1000):
        same_n = [r for r in records if r.n == n]
        assert len({r.result_bits for r in same_n}) == 1
        for algo in ("ripple", "middle"):
            ops = [r.ops for r in same_n if r.algo == algo]
            assert ops[0] == ops[1]


def test_fib_kind():
    plan = BenchPlan.build(index_list=[10, 20], algos=["middle", "fib-doubling", "linear"], kind="fib",
                           reps=1, warmup=0)
    records = list(run_bench(plan))
    assert {r.kind for r in records} == {"fib"}
    assert {r.result_bits for r in records if r.n == 10} == {(55).bit_length()}


def test_mismatch_aborts(monkeypatch):
    monkeypatch.setattr("sequences.middle.INITIAL_TRIPLE", LucasTriple(3, 4, 8))
    plan = BenchPlan.build(index_list=[4, 7], algos=["linear", "middle"], reps=1, warmup=0)
    records = run_bench(plan)
    first = [next(records), next(records)]
    assert [r.n for r in first] == [4, 4]
    with pytest.raises(MismatchError) as info:
        next(records)
    assert info.value.n == 7
    assert info.value.expected_algo == "linear"
    assert info.value.actual_algo == "middle"


@pytest.mark.parametrize("fields", [
    dict(index_list=[], algos=["middle"]),
    dict(index_list=[10, 5], algos=["middle"]),
    dict(index_list=[10, 10], algos=["middle"]),
    dict(index_list=[10], algos=[]),
    dict(index_list=[10], algos=["middle"], reps=0),
    dict(index_list=[10], algos=["middle"], warmup=-1),
    dict(index_list=[10], algos=["via-fib"], kind="fib"),
    dict(index_list=[10], algos=["middle", "middle"]),
    dict(index_list=[10], algos=["nope"]),
])
def test_invalid_plans(fields):
    with pytest.raises(UsageError):
        BenchPlan.build(**fields)


def test_plan_index_overflow():
    with pytest.raises(IndexOverflowError):
        BenchPlan.build(index_list=[MAX_INDEX + 1], algos=["middle"])


def test_geometric_indices():
    indices = geometric_indices(2, 1048576, 11)
    assert len(indices) == 11
    assert indices[0] == 2 and indices[-1] == 1048576
    assert indices == sorted(set(indices))


def test_geometric_indices_deduplicate():
    indices = geometric_indices(1, 4, 10)
    assert indices == [1, 2, 3, 4]


@pytest.mark.parametrize("args", [(0, 10, 3), (10, 5, 3), (2, 10, 1), (2, 10, 0)])
def test_geometric_indices_invalid(args):
    with pytest.raises(UsageError):
        geometric_indices(*args)


def _record(n=10, algo="middle", rep=0):
    return BenchRecord(n=n, kind="lucas", algo=algo, rep=rep, elapsed_ns=1234,
                       ops=OpCounts(squarings=4, add_subs=6), result_bits=7)


def test_csv_header_only():
    buffer = io.StringIO()
    write_csv([], buffer)
    assert buffer.getvalue() == HEADER_LINE + "\n"
    assert ",".join(CSV_HEADER) == HEADER_LINE


def test_csv_single_row():
    buffer = io.StringIO()
    write_csv([_record()], buffer)
    lines = buffer.getvalue().split("\n")
    assert lines[-1] == ""
    assert lines[1] == "10,lucas,middle,0,1234,4,0,6,0,0,7"
    assert len(lines[1].split(",")) == 11


def test_csv_row_count(tmp_path):
    records = [_record(n, algo, rep) for n in (10, 20) for algo in ("middle", "linear") for rep in range(3)]
    path = tmp_path / "out.csv"
    write_csv(records, path)
    text = path.read_text(encoding="utf-8")
    assert len(text.splitlines()) == 1 + 12
    assert not any(line.endswith(",") for line in text.splitlines())


def test_csv_write_failure_reports_path(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    target = blocker / "out.csv"
    with pytest.raises(BenchIOError) as info:
        write_csv([_record()], target)
    assert str(target) in str(info.value)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
