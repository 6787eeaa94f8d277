"""Статистическая сумма Z_C(beta) = (1 - q^((R-beta)n))^(-1)."""

import math

import codephases.internal.strategies.partition as partition_strategies
from codephases.codes import Code
from codephases.internal.constants import SERIES_DEFAULT_TERMS
from codephases.internal.errors import PreconditionError
from codephases.thermo.values import PartitionValue


def code_log_ratio(code: Code, beta: float) -> float:
    """ln q^((R-beta)n) = (k - beta n) ln q."""
    return (code.params.k_real - beta * code.n) * math.log(code.q)


def partition_function(
    code: Code, beta: float, mode: str = "closed", terms: int = SERIES_DEFAULT_TERMS
) -> PartitionValue:
    """
    Статистическая сумма системы кода при обратной температуре beta.

    Сходится при beta > R; при beta <= R возвращается расходимость.

    Args:
        code: Код
        beta: Обратная температура (> 0)
        mode: "closed" - замкнутая форма, "series" - частичная сумма с оценкой хвоста
        terms: Наибольшая степень M в режиме ряда

    Returns:
        Значение статистической суммы
    """
    if not beta > 0:
        raise PreconditionError(f"beta={beta} должно быть положительным")
    strategy = partition_strategies.get_partition_strategy(mode, terms)
    return strategy.evaluate(code_log_ratio(code, beta), beta)
