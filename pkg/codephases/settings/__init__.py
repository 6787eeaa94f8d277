"""Настройки codephases."""

from codephases.settings.run import RunConfig
from codephases.settings.runtime import RuntimeSettings

__all__ = [
    "RunConfig",
    "RuntimeSettings",
]
