#!/usr/bin/env python3
"""
Запуск командной строки LucasToolkit.

Примеры:
    python run_cli.py compute --kind lucas --algo middle -n 10
    python run_cli.py verify --max 512
    python run_cli.py bench --indices 1024,4096 --algos middle,ripple-memo --reps 2 --csv out.csv
"""

import sys
from pathlib import Path

# Добавляем текущую директорию в путь
sys.path.append(str(Path(__file__).resolve().parent))

from cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
