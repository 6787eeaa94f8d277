"""Определение версии установленного codephases."""

import logging
from typing import Optional

logger = logging.getLogger(__name__)

DISTRIBUTION_NAME: str = "codephases"


def detect_tool_version() -> str:
    """
    Определяет версию инструмента для заголовков артефактов.

    Сначала читает метаданные установленного дистрибутива, затем
    откатывается к атрибуту __version__ пакета.

    Returns:
        Строка версии
    """
    version = _detect_from_metadata()
    if version is not None:
        return version
    return _detect_from_package()


def _detect_from_metadata() -> Optional[str]:
    """Определяет версию из метаданных пакета."""
    try:
        from importlib.metadata import PackageNotFoundError, version

        return version(DISTRIBUTION_NAME)
    except PackageNotFoundError:
        return None
    except (ImportError, ValueError) as e:
        logger.debug(f"Не удалось прочитать метаданные дистрибутива: {e}")
        return None


def _detect_from_package() -> str:
    """Определяет версию по атрибуту пакета (fallback)."""
    import codephases

    return str(codephases.__version__)
