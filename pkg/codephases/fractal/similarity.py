"""Размерность подобия неравномерного самоподобного множества."""

import logging
from typing import Sequence

import numpy as np

from codephases.internal.errors import PreconditionError
from codephases.internal.numerics import solve_unit_level

logger = logging.getLogger(__name__)


def similarity_dimension(weights: Sequence[float]) -> float:
    """
    Единственное s с суммой w_a^s = 1.

    Args:
        weights: Коэффициенты сжатия из (0, 1)

    Returns:
        Размерность подобия; для одного коэффициента 0.0

    Raises:
        PreconditionError: Пустой список или коэффициент вне (0, 1)
    """
    if len(weights) == 0:
        raise PreconditionError("Список коэффициентов пуст")
    values = np.asarray(weights, dtype=float)
    if np.any(values <= 0.0) or np.any(values >= 1.0):
        raise PreconditionError("Коэффициенты подобия должны лежать в (0, 1)")
    if values.size == 1:
        logger.warning("⚠️ Один коэффициент: уравнение w^s = 1 выполняется только при s = 0")
        return 0.0
    logs = np.log(values)
    return solve_unit_level(lambda s: float(np.exp(s * logs).sum()))
