"""Язык слов из кодовых букв: структурная функция, производящая функция и энтропия."""

import math
from dataclasses import dataclass
from typing import Dict, Optional

from codephases.codes import Code, ExactRate
from codephases.internal.constants import DEFAULT_DEPTH_CAP, TOLERANCE
from codephases.internal.errors import InputError


@dataclass(frozen=True)
class LanguageReport:
    """
    Отчет о языке Lambda_C.

    g_value равно None, если аргумент вне круга сходимости |t| < q^(-R) или не задан;
    в первом случае g_divergent=True.
    """

    structure_values: Dict[int, int]
    t: Optional[float]
    g_value: Optional[float]
    g_divergent: bool
    entropy: float
    rate: ExactRate


def structure_function(code: Code, cap: int) -> Dict[int, int]:
    """s(N) = #C^m при N = n m, иначе 0, для N = 0..cap."""
    return {
        length: code.size ** (length // code.n) if length % code.n == 0 else 0
        for length in range(cap + 1)
    }


def _generating_value(code: Code, t: float) -> Optional[float]:
    if t == 0.0:
        return 1.0
    log_term = math.log(code.size) + code.n * math.log(abs(t))
    if log_term >= -TOLERANCE:
        return None
    if t > 0.0 or code.n % 2 == 0:
        return -1.0 / math.expm1(log_term)
    return 1.0 / (1.0 + math.exp(log_term))


def language_generating(
    code: Code,
    t: Optional[float] = None,
    beta: Optional[float] = None,
    cap: Optional[int] = None,
) -> LanguageReport:
    """
    Структурная функция, значение G(t) = (1 - q^k t^n)^(-1) и энтропия k/n.

    При заданном beta используется t = q^(-beta), и G(q^(-beta)) совпадает
    со статистической суммой кода.

    Args:
        code: Код
        t: Аргумент производящей функции
        beta: Альтернатива t
        cap: Наибольшая длина N для s(N); по умолчанию DEFAULT_DEPTH_CAP * n

    Returns:
        Отчет о языке
    """
    if t is not None and beta is not None:
        raise InputError("Задайте либо t, либо beta, но не оба")
    if cap is None:
        cap = DEFAULT_DEPTH_CAP * code.n
    if cap < 0:
        raise InputError(f"cap={cap} должно быть >= 0")
    if beta is not None:
        t = code.q ** (-beta)
    g_value = None if t is None else _generating_value(code, t)
    return LanguageReport(
        structure_values=structure_function(code, cap),
        t=t,
        g_value=g_value,
        g_divergent=t is not None and g_value is None,
        entropy=code.params.k_real / code.n,
        rate=code.params.rate,
    )
