"""Сериализаторы артефактов."""

from codephases.internal.serializers.artifacts import (
    format_float,
    format_fraction,
    format_number,
    serialize_for_artifact,
)

__all__ = ["format_float", "format_fraction", "format_number", "serialize_for_artifact"]
