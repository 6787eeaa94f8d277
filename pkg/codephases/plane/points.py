"""Точки кодов в плоскости (R, delta)."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from codephases.codes import Code
from codephases.codes.code import real_log
from codephases.internal.errors import InputError, PreconditionError


@dataclass(frozen=True)
class PlanePoint:
    """Точка квадрата [0,1]^2 с рациональными координатами R (вертикаль) и delta."""

    R: Fraction
    delta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "R", Fraction(self.R))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if not (0 <= self.R <= 1 and 0 <= self.delta <= 1):
            raise InputError(f"Точка (R={self.R}, delta={self.delta}) вне [0,1]^2")

    @property
    def in_domain(self) -> bool:
        """Лежит ли точка в области R + delta < 1."""
        return self.R + self.delta < 1

    def sort_key(self) -> tuple:
        return (self.delta, -self.R)


@dataclass(frozen=True)
class CodePoint(PlanePoint):
    """
    Точка кода ([k]/n, d/n) с происхождением.

    Равенство и хэш учитывают только координаты.
    """

    n: int = field(default=0, compare=False)
    size: int = field(default=0, compare=False)
    d: int = field(default=0, compare=False)
    q: int = field(default=2, compare=False)
    tag: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.delta <= 0:
            raise InputError(f"У точки кода delta={self.delta} должно быть > 0")

    @classmethod
    def from_code(cls, code: Code, tag: str = "") -> "CodePoint":
        """
        Точка кода с R = [k]/n и delta = d/n.

        Raises:
            PreconditionError: Если #C < 2 и delta не определено
        """
        params = code.params
        if params.d is None or params.delta is None:
            raise PreconditionError("Точка кода не определена при #C < 2")
        return cls(
            R=params.R_floor,
            delta=params.delta,
            n=code.n,
            size=code.size,
            d=params.d,
            q=code.q,
            tag=tag,
        )

    @property
    def rate_real(self) -> Optional[float]:
        """Вещественная скорость log_q(#C)/n для отображения."""
        if self.n <= 0 or self.size <= 0:
            return None
        return real_log(self.size, self.q) / self.n
