"""Критическая обратная температура."""

import logging

from codephases.internal.numerics import solve_unit_level
from codephases.thermo.weights import Weights

logger = logging.getLogger(__name__)


def critical_beta(weights: Weights) -> float:
    """
    Единственное beta с суммой e^(-beta lambda_a) = 1.

    Сумма строго убывает по beta; при одной букве корень лежит на границе beta = 0.

    Args:
        weights: Непустой набор весов

    Returns:
        Критическое beta с невязкой меньше 1e-12
    """
    if weights.count == 1:
        logger.warning("⚠️ Один вес: сумма равна 1 только при beta = 0")
        return 0.0
    return solve_unit_level(weights.total)
