"""Настройки окружения выполнения."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class RuntimeSettings(BaseSettings):
    """
    Настройки, читаемые из окружения.

    Единственный параметр - число потоков для параллельных переборов
    (CODEPHASES_THREADS). Все остальное передается флагами командной строки.
    """

    model_config = SettingsConfigDict(  # type: ignore[assignment]
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="CODEPHASES_",
        case_sensitive=False,
        extra="ignore",
    )

    threads: int = Field(default=1, ge=1, description="Число потоков для переборов")
