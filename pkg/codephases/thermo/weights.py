"""Веса lambda_a временной эволюции."""

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, Mapping, Optional, Tuple

import numpy as np

from codephases.codes import Code
from codephases.internal.errors import InputError, PreconditionError


@dataclass(frozen=True)
class Weights:
    """
    Положительные веса lambda_a, сгруппированные по значению.

    levels - пары (lambda, кратность) по возрастанию lambda; letters -
    необязательное отображение буква -> lambda, если буквы материализованы.
    """

    levels: Tuple[Tuple[float, int], ...]
    letters: Optional[Mapping[Hashable, float]] = field(default=None, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not self.levels:
            raise PreconditionError("Набор весов пуст")
        for value, multiplicity in self.levels:
            if not value > 0.0 or not math.isfinite(value):
                raise InputError(f"Вес lambda={value} должен быть положительным и конечным")
            if multiplicity < 1:
                raise InputError(f"Кратность {multiplicity} должна быть >= 1")

    @classmethod
    def from_levels(cls, levels: Iterable[Tuple[float, int]]) -> "Weights":
        grouped: Dict[float, int] = defaultdict(int)
        for value, multiplicity in levels:
            grouped[float(value)] += int(multiplicity)
        return cls(levels=tuple(sorted(grouped.items())))

    @classmethod
    def from_mapping(cls, mapping: Mapping[Hashable, float]) -> "Weights":
        grouped: Dict[float, int] = defaultdict(int)
        for value in mapping.values():
            grouped[float(value)] += 1
        return cls(levels=tuple(sorted(grouped.items())), letters=dict(mapping))

    @classmethod
    def uniform(cls, code: Code) -> "Weights":
        """Равномерные веса lambda_a = n ln q для всех слов кода."""
        value = code.n * math.log(code.q)
        return cls(levels=((value, code.size),), letters={word: value for word in code.words})

    @property
    def count(self) -> int:
        return sum(multiplicity for _, multiplicity in self.levels)

    def total(self, beta: float) -> float:
        """Сумма e^(-beta lambda_a) по всем буквам."""
        values = np.array([value for value, _ in self.levels])
        counts = np.array([multiplicity for _, multiplicity in self.levels], dtype=float)
        return float(counts @ np.exp(-beta * values))

    def weight(self, letter: Hashable) -> float:
        if self.letters is None or letter not in self.letters:
            raise InputError(f"Буква {letter!r} не имеет веса")
        return float(self.letters[letter])
