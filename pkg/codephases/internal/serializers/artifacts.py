"""Сериализация результатов в детерминированные артефакты CSV/JSON."""

import dataclasses
import math
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping, Sequence

from codephases.internal.constants import DIVERGENT_LABEL, FLOAT_DIGITS


def format_float(value: float, digits: int = FLOAT_DIGITS) -> str:
    """
    Форматирует вещественное число с заданным числом значащих цифр.

    Целые значения сохраняют суффикс ".0", чтобы колонка читалась как вещественная.

    Args:
        value: Число
        digits: Количество значащих цифр

    Returns:
        Строковое представление; бесконечность превращается в метку расходимости
    """
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return DIVERGENT_LABEL if value > 0 else "-" + DIVERGENT_LABEL
    text = f"{value:.{digits}g}"
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def format_fraction(value: Fraction) -> str:
    """Форматирует рациональное число как "num/den"."""
    return f"{value.numerator}/{value.denominator}"


def format_number(value: Any) -> str:
    """Форматирует число для ячейки CSV; None означает расходимость."""
    if value is None:
        return DIVERGENT_LABEL
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def serialize_for_artifact(data: Any) -> Any:
    """
    Приводит данные к JSON-совместимому виду с фиксированным порядком ключей.

    - Fraction превращается в строку "num/den"
    - float округляется до 15 значащих цифр, бесконечность становится "DIV"
    - Словари сортируются по строковому ключу
    - Pydantic модели и dataclass-объекты разворачиваются в словари

    Args:
        data: Данные для сериализации

    Returns:
        Структура из dict/list/str/int/float/bool/None
    """
    if data is None or isinstance(data, (bool, str)):
        return data

    if isinstance(data, Enum):
        return serialize_for_artifact(data.value)

    if isinstance(data, Fraction):
        return format_fraction(data)

    if isinstance(data, int):
        return data

    if isinstance(data, float):
        if not math.isfinite(data):
            return format_float(data)
        return float(f"{data:.{FLOAT_DIGITS}g}")

    if hasattr(data, "model_dump"):
        return serialize_for_artifact(data.model_dump())

    if dataclasses.is_dataclass(data) and not isinstance(data, type):
        return serialize_for_artifact(
            {field.name: getattr(data, field.name) for field in dataclasses.fields(data)}
        )

    if isinstance(data, Mapping):
        items = sorted(((str(key), value) for key, value in data.items()), key=lambda kv: kv[0])
        return {key: serialize_for_artifact(value) for key, value in items}

    if isinstance(data, (Sequence, set, frozenset)) and not isinstance(data, (str, bytes)):
        items = list(data)
        if isinstance(data, (set, frozenset)):
            items = sorted(items, key=repr)
        return [serialize_for_artifact(item) for item in items]

    # fallback - строковое представление
    return str(data)
