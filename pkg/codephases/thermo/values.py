"""Значения статистических сумм и их статус сходимости."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class PartitionStatus(str, Enum):
    """Статус ряда."""

    CONVERGENT = "convergent"
    DIVERGENT = "divergent"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class PartitionValue:
    """
    Значение статистической суммы при обратной температуре beta.

    value равно None тогда и только тогда, когда ряд расходится.
    """

    beta: float
    value: Optional[float]
    status: PartitionStatus
    terms_used: int
    closed_form_used: bool
    tail_bound: Optional[float] = None
    partial_sum: Optional[float] = None

    @property
    def is_divergent(self) -> bool:
        return self.status is PartitionStatus.DIVERGENT
