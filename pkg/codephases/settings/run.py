"""Конфигурация одного запуска командной строки."""

import hashlib
import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from codephases.internal.constants import DEFAULT_DEPTH_CAP, DEFAULT_MAX_CELLS, SERIES_DEFAULT_TERMS
from codephases.internal.serializers import serialize_for_artifact

# Длина префикса хэша конфигурации в заголовках
_HASH_PREFIX_LENGTH: int = 12

# Поля, не влияющие на содержимое артефактов
_HASH_EXCLUDED_FIELDS = frozenset({"output", "svg", "verbose", "threads"})


class RunConfig(BaseModel):
    """
    Полное описание запуска подкоманды.

    Одинаковая конфигурация дает побайтно одинаковые артефакты.
    """

    subcommand: str = Field(..., description="Имя подкоманды")
    inputs: List[str] = Field(default_factory=list, description="Пути входных файлов")
    seed: Optional[int] = Field(default=None, description="Зерно генератора")
    randomized: bool = Field(default=False, description="Запуск использует случайность")
    depth: int = Field(default=DEFAULT_DEPTH_CAP, ge=0, description="Глубина цилиндров")
    terms: int = Field(default=SERIES_DEFAULT_TERMS, ge=1, description="Число членов рядов")
    max_cells: int = Field(default=DEFAULT_MAX_CELLS, ge=1, description="Бюджет ячеек")
    exact: bool = Field(default=False, description="Рациональный вывод, если доступен")
    output: Optional[str] = Field(default=None, description="Путь основного артефакта")
    svg: Optional[str] = Field(default=None, description="Путь SVG-графика")
    threads: int = Field(default=1, ge=1, description="Число потоков")
    verbose: bool = Field(default=False, description="Отладочный вывод")
    options: Dict[str, Any] = Field(default_factory=dict, description="Параметры подкоманды")

    @model_validator(mode="after")
    def _seed_required_for_random_runs(self) -> "RunConfig":
        if self.randomized and self.seed is None:
            raise ValueError("Для случайного запуска обязателен --seed")
        return self

    def config_hash(self) -> str:
        """
        Вычисляет устойчивый хэш конфигурации.

        Returns:
            Префикс SHA-256 канонического JSON
        """
        payload = {
            key: value
            for key, value in self.model_dump().items()
            if key not in _HASH_EXCLUDED_FIELDS
        }
        canonical = json.dumps(serialize_for_artifact(payload), sort_keys=True)
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:_HASH_PREFIX_LENGTH]
