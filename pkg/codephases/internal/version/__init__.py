"""Определение версии установленного codephases."""

from codephases.internal.version.detector import detect_tool_version

__all__ = ["detect_tool_version"]
