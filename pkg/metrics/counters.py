"""
Модуль счётчиков арифметических операций.

Счётчик передаётся в алгоритм явным параметром и принадлежит одному вызову,
поэтому параллельные замеры не пересекаются.
Умножения на малые константы (±2, ±4) и деление пополам считаются сдвигами
и в умножения не входят.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, NonNegativeInt


class OpCounts(BaseModel):
    """
    Счётчики операций одного вызова алгоритма.

    Attributes:
        squarings: Возведения в квадрат больших чисел.
        general_mults: Умножения двух разных операндов.
        add_subs: Сложения и вычитания (включая знаковые добавки ±2, ±4).
        recursive_calls: Вызовы рекурсивной процедуры, включая попадания в кэш.
        memo_hits: Ответы из таблицы мемоизации.
    """

    model_config = ConfigDict(validate_assignment=False)

    squarings: NonNegativeInt = 0
    general_mults: NonNegativeInt = 0
    add_subs: NonNegativeInt = 0
    recursive_calls: NonNegativeInt = 0
    memo_hits: NonNegativeInt = 0

    @property
    def multiplications(self) -> int:
        """Всего больших умножений: квадраты плюс общие умножения."""
        return self.squarings + self.general_mults

    @property
    def fresh_evaluations(self) -> int:
        """Вызовы, которые действительно что-то вычислили."""
        return self.recursive_calls - self.memo_hits

    def summary(self) -> str:
        """Однострочная сводка в формате key=value."""
        return " ".join(f"{name}={value}" for name, value in self.model_dump().items())


def ensure_counter(counter: Optional[OpCounts]) -> OpCounts:
    """Возвращает переданный счётчик или новый, если его нет."""
    return counter if counter is not None else OpCounts()


def counted_square(x: int, counter: OpCounts) -> int:
    """
    Возведение в квадрат с учётом операции.

    Args:
        x (int): Число.
        counter (OpCounts): Счётчик, в котором увеличивается squarings.

    Returns:
        int: x в квадрате.
    """
    counter.squarings += 1
    return x * x


def counted_mul(x: int, y: int, counter: OpCounts) -> int:
    """
    Общее умножение с учётом операции.

    Вызов этой функции вместо counted_square означает, что алгоритм использует
    общее умножение, даже если x == y.

    Args:
        x (int): Первый множитель.
        y (int): Второй множитель.
        counter (OpCounts): Счётчик, в котором увеличивается general_mults.

    Returns:
        int: Произведение x * y.
    """
    counter.general_mults += 1
    return x * y
