"""Назначения на цилиндрах: меры, полумеры и цилиндрические функции."""

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Sequence, Tuple, Union

from codephases.codes import Word
from codephases.internal.constants import TOLERANCE
from codephases.internal.errors import InputError, PreconditionError

Number = Union[float, Fraction]
CylinderWord = Tuple[Word, ...]


def cylinder_words(letters: Sequence[Word], length: int) -> Iterator[CylinderWord]:
    """Все слова заданной длины над буквами в лексикографическом порядке."""
    return itertools.product(letters, repeat=length)


def _check_letters(letters: Tuple[Word, ...]) -> None:
    if not letters:
        raise InputError("Набор букв пуст")
    if len(set(letters)) != len(letters):
        raise InputError("Буквы повторяются")


class MeasureClass(str, Enum):
    """Результат проверки назначения."""

    MEASURE = "measure"
    SEMIMEASURE = "semimeasure"
    NEITHER = "neither"


@dataclass(frozen=True)
class CylinderFunction:
    """Функция, зависящая от первых depth букв: значения на словах длины depth."""

    letters: Tuple[Word, ...]
    depth: int
    values: Mapping[CylinderWord, Number]

    def __post_init__(self) -> None:
        _check_letters(self.letters)
        if self.depth < 0:
            raise InputError(f"depth={self.depth} < 0")
        expected = len(self.letters) ** self.depth
        if len(self.values) != expected or any(len(w) != self.depth for w in self.values):
            raise InputError(f"Функция глубины {self.depth} должна иметь {expected} значений")

    @classmethod
    def constant(cls, letters: Sequence[Word], depth: int, value: Number = 1) -> "CylinderFunction":
        letters = tuple(letters)
        return cls(letters, depth, {w: value for w in cylinder_words(letters, depth)})

    @classmethod
    def indicator(cls, letters: Sequence[Word], prefix: Sequence[Word]) -> "CylinderFunction":
        """Индикатор цилиндра слов, начинающихся с prefix."""
        letters = tuple(letters)
        prefix = tuple(tuple(letter) for letter in prefix)
        values = {w: int(w == prefix) for w in cylinder_words(letters, len(prefix))}
        return cls(letters, len(prefix), values)

    def __call__(self, word: Sequence[Word]) -> Number:
        return self.values[tuple(word)[: self.depth]]

    def is_constant(self, tolerance: float = TOLERANCE) -> bool:
        values = list(self.values.values())
        return all(abs(value - values[0]) <= tolerance for value in values)


@dataclass(frozen=True)
class CylinderAssignment:
    """
    Значения mu(w) на словах длины 0..depth над буквами кода.

    Пустое слово несет полную массу mu(S_C).
    """

    letters: Tuple[Word, ...]
    depth: int
    values: Mapping[CylinderWord, Number]

    def __post_init__(self) -> None:
        _check_letters(self.letters)
        if self.depth < 0:
            raise InputError(f"depth={self.depth} < 0")
        alphabet = set(self.letters)
        for word, value in self.values.items():
            if len(word) > self.depth or any(letter not in alphabet for letter in word):
                raise InputError(f"Слово {word} вне букв назначения или глубже {self.depth}")
            if value < 0:
                raise InputError(f"Отрицательное значение {value} на слове {word}")
        if () not in self.values:
            raise InputError("Назначение должно содержать значение на пустом слове")

    def value(self, word: Sequence[Word]) -> Number:
        key = tuple(tuple(letter) for letter in word)
        if len(key) > self.depth:
            raise PreconditionError(f"Слово длины {len(key)} глубже {self.depth}")
        return self.values.get(key, 0)

    def layer(self, length: int) -> Dict[CylinderWord, Number]:
        return {w: self.value(w) for w in cylinder_words(self.letters, length)}

    def layer_mass(self, length: int) -> Number:
        """Сумма mu(w) по словам длины length."""
        return sum(self.layer(length).values())

    @property
    def is_exact(self) -> bool:
        return all(isinstance(value, (Fraction, int)) for value in self.values.values())

    def as_function(self, depth: Union[int, None] = None) -> CylinderFunction:
        """Слой назначения как цилиндрическая функция."""
        depth = self.depth if depth is None else depth
        return CylinderFunction(self.letters, depth, self.layer(depth))


def check_semimeasure(mu: CylinderAssignment, tolerance: float = TOLERANCE) -> MeasureClass:
    """
    Классифицирует назначение по неравенствам полумеры.

    Полумера: mu(w) >= sum_a mu(wa) на всех доступных глубинах и mu(S_C) <= 1.
    Мера: всюду равенство и mu(S_C) = 1. Точные назначения проверяются без допуска.

    Args:
        mu: Назначение
        tolerance: Допуск для вещественных значений

    Returns:
        Класс назначения
    """
    tol = 0 if mu.is_exact else tolerance
    total = mu.value(())
    if total > 1 + tol:
        return MeasureClass.NEITHER
    additive = abs(total - 1) <= tol
    for length in range(mu.depth):
        for word in cylinder_words(mu.letters, length):
            children = sum(mu.value(word + (letter,)) for letter in mu.letters)
            parent = mu.value(word)
            if parent < children - tol:
                return MeasureClass.NEITHER
            if abs(parent - children) > tol:
                additive = False
    return MeasureClass.MEASURE if additive else MeasureClass.SEMIMEASURE
