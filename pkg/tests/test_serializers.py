"""Тесты для сериализаторов артефактов."""

import json
import math
from fractions import Fraction
from unittest.mock import patch

import pytest

from codephases.internal.serializers import (
    format_float,
    format_fraction,
    format_number,
    serialize_for_artifact,
)
from codephases.internal.version import detect_tool_version
from codephases.measures import MeasureClass
from codephases.plane import PlanePoint
from codephases.settings import RunConfig


@pytest.mark.parametrize(
    "value, expected",
    [
        (8 / 7, "1.14285714285714"),
        (1.0, "1.0"),
        (2.0, "2.0"),
        (0.5, "0.5"),
        (1e-20, "1e-20"),
        (math.inf, "DIV"),
        (-math.inf, "-DIV"),
        (math.nan, "nan"),
    ],
)
def test_format_float(value, expected):
    """Тест форматирования вещественных чисел."""
    assert format_float(value) == expected


def test_format_fraction():
    """Тест форматирования дробей."""
    assert format_fraction(Fraction(3, 7)) == "3/7"
    assert format_fraction(Fraction(6, 3)) == "2/1"


@pytest.mark.parametrize(
    "value, expected",
    [
        (None, "DIV"),
        (True, "true"),
        (False, "false"),
        (5, "5"),
        (Fraction(6, 4), "3/2"),
        (0.25, "0.25"),
        ("lower", "lower"),
    ],
)
def test_format_number(value, expected):
    """Тест форматирования ячеек CSV."""
    assert format_number(value) == expected


def test_serialize_none_and_scalars():
    """Тест сериализации простых значений."""
    assert serialize_for_artifact(None) is None
    assert serialize_for_artifact(True) is True
    assert serialize_for_artifact(7) == 7
    assert serialize_for_artifact(0.1 + 0.2) == 0.3
    assert serialize_for_artifact(math.inf) == "DIV"


def test_serialize_mapping_sorted():
    """Тест сортировки ключей и вложенных множеств."""
    result = serialize_for_artifact({"b": Fraction(1, 2), "a": math.inf, 1: {2, 1}})
    assert list(result) == ["1", "a", "b"]
    assert result == {"1": [1, 2], "a": "DIV", "b": "1/2"}


def test_serialize_enum_and_dataclass():
    """Тест сериализации перечислений и dataclass-объектов."""
    assert serialize_for_artifact(MeasureClass.SEMIMEASURE) == "semimeasure"
    point = PlanePoint(Fraction(1, 4), Fraction(3, 8))
    assert serialize_for_artifact(point) == {"R": "1/4", "delta": "3/8"}


def test_serialize_pydantic_model():
    """Тест сериализации pydantic модели."""
    result = serialize_for_artifact(RunConfig(subcommand="params", inputs=["c.json"]))
    assert result["subcommand"] == "params"
    assert result["inputs"] == ["c.json"]
    json.dumps(result)


def test_serialize_fallback_to_string():
    """Тест строкового представления неизвестных объектов."""

    class Custom:
        def __str__(self) -> str:
            return "custom"

    assert serialize_for_artifact(Custom()) == "custom"


def test_detect_tool_version_from_metadata():
    """Тест версии из метаданных дистрибутива."""
    with patch(
        "codephases.internal.version.detector._detect_from_metadata", return_value="9.9.9"
    ):
        assert detect_tool_version() == "9.9.9"


def test_detect_tool_version_fallback():
    """Тест отката к атрибуту __version__ пакета."""
    with patch("codephases.internal.version.detector._detect_from_metadata", return_value=None):
        assert detect_tool_version() == "0.1.0"
