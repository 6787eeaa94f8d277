"""Поиск корня монотонных сумм бисекцией."""

import logging
from typing import Callable

from scipy.optimize import bisect

from codephases.internal.constants import BISECTION_LOWER, BISECTION_MAX_ITER, TOLERANCE
from codephases.internal.errors import ConvergenceError, PreconditionError

logger = logging.getLogger(__name__)

# Удвоения правой границы до отказа
_MAX_DOUBLINGS: int = 64


def solve_unit_level(
    func: Callable[[float], float],
    lower: float = BISECTION_LOWER,
    max_iter: int = BISECTION_MAX_ITER,
    tolerance: float = TOLERANCE,
) -> float:
    """
    Решает func(x) = 1 для строго убывающей на (0, ∞) функции.

    Скобка [lower, B], где B удваивается от 1, пока func(B) не станет меньше 1.

    Args:
        func: Строго убывающая функция
        lower: Левая граница скобки
        max_iter: Максимум итераций бисекции
        tolerance: Допуск на |func(x) - 1|

    Returns:
        Корень уравнения

    Raises:
        PreconditionError: Если func(lower) <= 1 и корня в скобке нет
        ConvergenceError: Если бисекция не сошлась
    """

    def shifted(x: float) -> float:
        return func(x) - 1.0

    at_lower = shifted(lower)
    if at_lower == 0.0:
        return lower
    if at_lower < 0.0:
        raise PreconditionError(
            f"Сумма не превосходит 1 уже при x={lower}: корня на (0, ∞) нет"
        )

    upper = 1.0
    for _ in range(_MAX_DOUBLINGS):
        value = shifted(upper)
        if value == 0.0:
            return upper
        if value < 0.0:
            break
        upper *= 2.0
    else:
        raise ConvergenceError(f"Не удалось найти правую границу скобки до x={upper}")

    root, result = bisect(
        shifted,
        lower,
        upper,
        xtol=1e-16,
        maxiter=max_iter,
        full_output=True,
        disp=False,
    )
    if not result.converged:
        raise ConvergenceError(
            f"Бисекция не сошлась за {max_iter} итераций (последнее x={root})"
        )
    residual = abs(shifted(root))
    if residual >= tolerance:
        raise ConvergenceError(f"Невязка {residual:e} выше допуска {tolerance:e}")
    logger.debug(f"Корень {root!r} найден за {result.iterations} итераций")
    return float(root)
