#!/usr/bin/env python3
"""
Тесты командной строки: вывод, коды завершения и файлы CSV.
"""

import logging
import sys
from pathlib import Path

import pytest

# Добавляем путь к проекту
sys.path.append(str(Path(__file__).resolve().parent))

from cli import build_parser, main
from config import BASE_DIR, LOG_FILE, MAX_INDEX
from sequences import LucasTriple, lucas_linear


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("argv, expected", [
    (["compute", "--kind", "lucas", "--algo", "middle", "-n", "10"], "123\n"),
    (["compute", "--kind", "lucas", "--algo", "ripple", "-n", "4"], "7\n"),
    (["compute", "--kind", "fib", "--algo", "middle", "-n", "10"], "55\n"),
    (["compute", "--kind", "fib", "--algo", "fib-doubling", "-n", "10"], "55\n"),
    (["compute", "--algo", "ripple_memo", "-n", "0"], "2\n"),
    (["compute", "--radix", "16", "-n", "30"], "1c6392\n"),
])
def test_compute_output(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_compute_length_only(capsys):
    code, out, _ = run(capsys, "compute", "-n", "10", "--length-only")
    assert code == 0
    assert out == "3\n"


def test_compute_stats_go_to_stderr(capsys):
    code, out, err = run(capsys, "compute", "-n", "16", "--stats")
    assert code == 0
    assert out == f"{lucas_linear(16)}\n"
    stats_line = err.strip().splitlines()[-1]
    assert stats_line == "squarings=6 general_mults=0 add_subs=9 recursive_calls=0 memo_hits=0"


def test_compute_is_byte_identical_across_runs(capsys):
    argv = ["compute", "--algo", "ripple-memo", "-n", "5000"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize("argv", [
    ["compute", "-n", "10", "--algo", "binet"],
    ["compute", "-n", "-3"],
    ["compute", "-n", str(MAX_INDEX + 1)],
    ["compute", "-n", "10", "--radix", "8"],
    ["compute", "--kind", "fib", "--algo", "via-fib", "-n", "10"],
    ["compute"],
    ["frobnicate"],
    ["verify", "--max", "-1"],
    ["verify", "--max", str(MAX_INDEX + 1)],
    ["bench", "--indices", "10,x"],
    ["bench", "--indices", "10", "--geometric", "2:8:3"],
    ["bench", "--geometric", "2:8"],
    ["bench", "--indices", "10", "--reps", "0"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err != ""


@pytest.mark.parametrize("maximum", ["512", "1", "0"])
def test_verify_passes(capsys, maximum):
    code, out, _ = run(capsys, "verify", "--max", maximum)
    assert code == 0
    assert len(out.splitlines()) == 1
    assert out.startswith("ok:")


def test_verify_fib(capsys):
    code, out, _ = run(capsys, "verify", "--max", "200", "--kind", "fib")
    assert code == 0


def test_verify_detects_corrupted_initial_triple(capsys, monkeypatch):
    monkeypatch.setattr("sequences.middle.INITIAL_TRIPLE", LucasTriple(3, 4, 8))
    code, out, _ = run(capsys, "verify", "--max", "16")
    assert code == 1
    assert "n=7" in out
    assert "algo=middle" in out
    assert "expected=29" in out


def test_bench_csv_file(capsys, tmp_path):
    target = tmp_path / "out.csv"
    code, out, _ = run(capsys, "bench", "--indices", "1024,4096", "--algos", "middle,ripple-memo",
                       "--reps", "2", "--csv", str(target))
    assert code == 0
    assert out == ""
    lines = target.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 9
    assert lines[0] == "n,kind,algo,rep,elapsed_ns,squarings,mults,adds,calls,memo_hits,result_bits"


def test_bench_geometric_to_stdout(capsys):
    code, out, _ = run(capsys, "bench", "--geometric", "2:1048576:11", "--algos", "middle", "--reps", "1")
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 11
    assert len({row.split(",")[0] for row in rows}) == 11


def test_bench_result_bits(capsys):
    code, out, _ = run(capsys, "bench", "--indices", "10", "--algos", "middle,linear", "--kind", "lucas",
                       "--reps", "1")
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert len(rows) == 2
    assert [row[-1] for row in rows] == ["7", "7"]


def test_bench_mismatch_exit_one(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr("sequences.middle.INITIAL_TRIPLE", LucasTriple(3, 4, 8))
    code, _, err = run(capsys, "bench", "--indices", "7", "--algos", "linear,middle", "--reps", "1",
                       "--csv", str(tmp_path / "out.csv"))
    assert code == 1
    assert "n=7" in err


def test_bench_unwritable_destination(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    code, _, err = run(capsys, "bench", "--indices", "10", "--algos", "middle", "--reps", "1",
                       "--csv", str(blocker / "out.csv"))
    assert code == 2
    assert str(blocker) in err


def test_log_file_flag_without_path_uses_default():
    args = build_parser().parse_args(["compute", "-n", "10", "--log-file"])
    assert args.log_file == LOG_FILE
    assert build_parser().parse_args(["compute", "-n", "10"]).log_file is None


def test_log_file_receives_records(capsys, tmp_path):
    target = tmp_path / "run.log"
    project_logger = logging.getLogger("lucas_toolkit")
    try:
        code, out, _ = run(capsys, "compute", "-n", "10", "-v", "--log-file", str(target))
        assert code == 0
        assert out == "123\n"
        assert "middle" in target.read_text(encoding="utf-8")
    finally:
        for handler in [h for h in project_logger.handlers if isinstance(h, logging.FileHandler)]:
            project_logger.removeHandler(handler)
            handler.close()
        run(capsys, "compute", "-n", "0")


def test_colorama_floor_provides_console_fix():
    requirements = (BASE_DIR / "requirements.txt").read_text(encoding="utf-8")
    assert "colorama>=0.4.6" in requirements
    from colorama import just_fix_windows_console
    assert callable(just_fix_windows_console)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
