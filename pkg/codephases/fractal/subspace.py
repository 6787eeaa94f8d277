"""Координатные подпространства pi: фиксированные позиции и их цифры."""

from dataclasses import dataclass
from typing import Mapping, Tuple

from codephases.codes import Code, Word
from codephases.internal.errors import InputError


@dataclass(frozen=True)
class CoordinateSubspace:
    """
    Подпространство x_i = x_i^0 для фиксированных позиций i (с единицы).

    ell = n - число фиксированных позиций.
    """

    n: int
    fixed: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        positions = [position for position, _ in self.fixed]
        if len(set(positions)) != len(positions):
            raise InputError("Позиции подпространства повторяются")
        if any(not 1 <= position <= self.n for position in positions):
            raise InputError(f"Позиции подпространства вне [1, {self.n}]")
        if any(digit < 0 for _, digit in self.fixed):
            raise InputError("Цифры подпространства должны быть неотрицательны")
        object.__setattr__(self, "fixed", tuple(sorted(self.fixed)))

    @classmethod
    def of(cls, n: int, fixed: Mapping[int, int]) -> "CoordinateSubspace":
        return cls(n=n, fixed=tuple((int(p), int(v)) for p, v in fixed.items()))

    @classmethod
    def whole(cls, n: int) -> "CoordinateSubspace":
        return cls(n=n)

    @classmethod
    def parse(cls, n: int, text: str) -> "CoordinateSubspace":
        """
        Разбирает запись вида "1=0,3=2".

        Args:
            n: Длина
            text: Пары позиция=цифра через запятую; пустая строка - все пространство

        Returns:
            Подпространство
        """
        fixed = {}
        for chunk in filter(None, (part.strip() for part in text.split(","))):
            try:
                position, digit = chunk.split("=")
                fixed[int(position)] = int(digit)
            except ValueError as e:
                raise InputError(f"Некорректная пара {chunk!r}: ожидалось позиция=цифра") from e
        return cls.of(n, fixed)

    @property
    def ell(self) -> int:
        return self.n - len(self.fixed)

    def matches(self, word: Word) -> bool:
        return all(word[position - 1] == digit for position, digit in self.fixed)

    def label(self) -> str:
        return ",".join(f"{position}={digit}" for position, digit in self.fixed)


def subspace_count(code: Code, pi: CoordinateSubspace) -> int:
    """
    Число кодовых слов в подпространстве.

    Raises:
        InputError: Если длины не совпадают или цифра pi вне алфавита
    """
    if pi.n != code.n:
        raise InputError(f"Подпространство в A^{pi.n}, код в A^{code.n}")
    if any(digit >= code.q for _, digit in pi.fixed):
        raise InputError(f"Цифры подпространства должны быть < {code.q}")
    return sum(1 for word in code.words if pi.matches(word))
