"""Классические границы Синглтона и Плоткина."""

from fractions import Fraction
from typing import Tuple, Union

from codephases.internal.errors import InputError
from codephases.plane.points import PlanePoint

Rational = Union[Fraction, int]


def _check(q: int, delta: Fraction) -> None:
    if q < 2:
        raise InputError(f"q={q} меньше 2")
    if not 0 <= delta <= 1:
        raise InputError(f"delta={delta} вне [0, 1]")


def singleton_rate(q: int, delta: Rational) -> Fraction:
    """Граница Синглтона R = 1 - delta + 1/(q+1), не ниже 0."""
    delta = Fraction(delta)
    _check(q, delta)
    return max(Fraction(0), 1 - delta + Fraction(1, q + 1))


def plotkin_rate(q: int, delta: Rational) -> Fraction:
    """Асимптотическая граница Плоткина R = 1 - delta - delta/(q-1), не ниже 0."""
    delta = Fraction(delta)
    _check(q, delta)
    return max(Fraction(0), 1 - delta - delta / (q - 1))


def classical_bounds(q: int, delta: Rational) -> Tuple[Fraction, Fraction]:
    """
    Правые части границ Синглтона и Плоткина в точке delta.

    Args:
        q: Размер алфавита
        delta: Относительное расстояние в [0, 1]

    Returns:
        (singleton_R, plotkin_R) как точные дроби
    """
    return singleton_rate(q, delta), plotkin_rate(q, delta)


def is_certainly_isolated(point: PlanePoint, q: int) -> bool:
    """
    Лежит ли точка строго выше прямой Плоткина.

    Такая точка лежит выше асимптотической границы, то есть код изолирован.
    """
    return point.R > plotkin_rate(q, point.delta)
