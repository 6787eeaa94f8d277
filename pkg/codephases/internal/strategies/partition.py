"""Стратегии вычисления геометрических статистических сумм."""

import math
from abc import ABC, abstractmethod

from codephases.internal.constants import SERIES_DEFAULT_TERMS, TOLERANCE
from codephases.internal.errors import InputError
from codephases.thermo.values import PartitionStatus, PartitionValue

# Граница показателя, при которой exp еще конечна
_MAX_LOG_FLOAT: float = 700.0


class PartitionStrategy(ABC):
    """Базовый класс: сумма ряда sum_m x^m по логарифму отношения ln x."""

    @abstractmethod
    def evaluate(self, log_ratio: float, beta: float) -> PartitionValue:
        """
        Вычисляет сумму ряда.

        Args:
            log_ratio: ln x; ряд сходится при ln x < 0
            beta: Обратная температура для отчета

        Returns:
            Значение или расходимость
        """


def _is_pole(log_ratio: float) -> bool:
    return log_ratio >= -TOLERANCE


class ClosedFormStrategy(PartitionStrategy):
    """Замкнутая форма (1 - x)^(-1)."""

    def evaluate(self, log_ratio: float, beta: float) -> PartitionValue:
        if _is_pole(log_ratio):
            return PartitionValue(beta, None, PartitionStatus.DIVERGENT, 0, True)
        value = -1.0 / math.expm1(log_ratio)
        return PartitionValue(beta, value, PartitionStatus.CONVERGENT, 0, True, 0.0, value)


class SeriesStrategy(PartitionStrategy):
    """Частичная сумма sum_{m=0}^{M} x^m с геометрической оценкой хвоста."""

    def __init__(self, terms: int = SERIES_DEFAULT_TERMS) -> None:
        if terms < 0:
            raise InputError(f"Число членов {terms} < 0")
        self.terms = terms

    def evaluate(self, log_ratio: float, beta: float) -> PartitionValue:
        if _is_pole(log_ratio):
            partial = math.inf
            if log_ratio * self.terms < _MAX_LOG_FLOAT:
                ratio = math.exp(log_ratio)
                partial = math.fsum(ratio**m for m in range(self.terms + 1))
            return PartitionValue(
                beta, None, PartitionStatus.DIVERGENT, self.terms + 1, False, None, partial
            )
        ratio = math.exp(log_ratio)
        partial = math.fsum(ratio**m for m in range(self.terms + 1))
        tail = math.exp(log_ratio * (self.terms + 1)) / -math.expm1(log_ratio)
        return PartitionValue(
            beta, partial, PartitionStatus.CONVERGENT, self.terms + 1, False, tail, partial
        )


def get_partition_strategy(mode: str, terms: int = SERIES_DEFAULT_TERMS) -> PartitionStrategy:
    """
    Возвращает стратегию для режима "closed" или "series".

    Args:
        mode: Режим вычисления
        terms: Наибольшая степень M для режима ряда

    Returns:
        Стратегия вычисления
    """
    if mode == "closed":
        return ClosedFormStrategy()
    if mode == "series":
        return SeriesStrategy(terms)
    raise InputError(f"Неизвестный режим статистической суммы: {mode!r}")
