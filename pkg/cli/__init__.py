"""
Пакет командной строки для проекта LucasToolkit.
Содержит разбор аргументов и команды compute, verify и bench.
"""

from cli.parser import CliConfig, build_parser, config_from_args
from cli.commands import cmd_compute, cmd_verify, cmd_bench, format_number, main

__all__ = [
    'CliConfig', 'build_parser', 'config_from_args',
    'cmd_compute', 'cmd_verify', 'cmd_bench', 'format_number', 'main',
]
