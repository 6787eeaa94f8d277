"""Командная строка codephases."""

from codephases.cli.commands import COMMANDS, run
from codephases.cli.main import build_config, main

__all__ = [
    "COMMANDS",
    "build_config",
    "main",
    "run",
]
