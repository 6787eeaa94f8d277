"""Управляющие конусы точки в области R + delta < 1."""

from fractions import Fraction
from typing import FrozenSet

from codephases.internal.errors import PreconditionError
from codephases.plane.points import PlanePoint

LOWER = "lower"
UPPER = "upper"
LEFT = "left"
RIGHT = "right"


def _cross_a(p: PlanePoint, q: PlanePoint) -> Fraction:
    # ориентированная площадь относительно угла (delta=0, R=1); <= 0 - сторона начала координат
    return p.delta * (q.R - 1) - (p.R - 1) * q.delta


def _cross_b(p: PlanePoint, q: PlanePoint) -> Fraction:
    # относительно угла (delta=1, R=0); >= 0 - сторона начала координат
    return (p.delta - 1) * q.R - p.R * (q.delta - 1)


def _require_domain(p: PlanePoint) -> None:
    if not p.in_domain:
        raise PreconditionError(f"Точка (R={p.R}, delta={p.delta}) вне области R + delta < 1")


def _require_closed_domain(p: PlanePoint) -> None:
    if p.R + p.delta > 1:
        raise PreconditionError(f"Точка (R={p.R}, delta={p.delta}) вне области R + delta <= 1")


def lower_cone_contains(p: PlanePoint, q: PlanePoint) -> bool:
    """
    Лежит ли q в нижнем конусе p (границы включены).

    Args:
        p: Вершина конуса, R + delta < 1
        q: Проверяемая точка

    Returns:
        True, если q не выше обеих прямых через p и углы (0,1), (1,0)

    Raises:
        PreconditionError: Если p вне области
    """
    _require_domain(p)
    return _cross_a(p, q) <= 0 and _cross_b(p, q) >= 0


def cone_partition(p: PlanePoint, q: PlanePoint) -> FrozenSet[str]:
    """
    Классифицирует q относительно четырех конусов точки p.

    На граничных лучах возвращается множество всех смежных конусов;
    сама точка p принадлежит всем четырем.

    Args:
        p: Вершина, R + delta < 1
        q: Точка с R + delta <= 1

    Returns:
        Непустое множество из "lower", "upper", "left", "right"
    """
    _require_domain(p)
    _require_closed_domain(q)
    a = _cross_a(p, q)
    b = _cross_b(p, q)
    labels = set()
    if a <= 0 and b >= 0:
        labels.add(LOWER)
    if a >= 0 and b <= 0:
        labels.add(UPPER)
    if a <= 0 and b <= 0:
        labels.add(LEFT)
    if a >= 0 and b >= 0:
        labels.add(RIGHT)
    return frozenset(labels)


def line_to_a(p: PlanePoint, delta: Fraction) -> Fraction:
    """Значение R на прямой через p и угол (delta=0, R=1)."""
    return 1 - (1 - p.R) * delta / p.delta


def line_to_b(p: PlanePoint, delta: Fraction) -> Fraction:
    """Значение R на прямой через p и угол (delta=1, R=0)."""
    return p.R * (1 - delta) / (1 - p.delta)


def tent_value(p: PlanePoint, delta: Fraction):
    """
    Верхняя граница нижнего конуса p над абсциссой delta.

    Returns:
        Рациональное R или None, если вертикаль не пересекает конус
    """
    delta = Fraction(delta)
    if p.delta == 0:
        return p.R if delta == 0 else None
    value = min(line_to_a(p, delta), line_to_b(p, delta))
    if value < 0:
        return None
    return value
