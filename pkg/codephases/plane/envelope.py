"""Эмпирическая огибающая объединения нижних конусов."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from codephases.internal.errors import PreconditionError
from codephases.plane.cones import lower_cone_contains, tent_value
from codephases.plane.points import PlanePoint

logger = logging.getLogger(__name__)

AXIS = "axis"
PEAK = "peak"
JUNCTION = "junction"


@dataclass(frozen=True)
class Envelope:
    """
    Верхняя граница объединения нижних конусов.

    vertices - недоминируемые входные точки (delta растет, R убывает);
    polyline - ломаная от пересечения с осью R через вершины и стыки
    конусов до пересечения с осью delta.
    """

    vertices: Tuple[PlanePoint, ...]
    polyline: Tuple[Tuple[PlanePoint, str], ...]

    def value_at(self, delta: Fraction) -> Optional[Fraction]:
        """
        Наибольшее R огибающей над абсциссой delta.

        Returns:
            Рациональное значение или None вне проекции объединения конусов
        """
        values = [v for v in (tent_value(p, delta) for p in self.vertices) if v is not None]
        return max(values) if values else None


def _junction(left: PlanePoint, right: PlanePoint) -> PlanePoint:
    # пересечение прямой left->(0,1) с прямой right->(1,0)
    b = right.R / (1 - right.delta)
    if left.delta == 0:
        return PlanePoint(R=b, delta=Fraction(0))
    a = (1 - left.R) / left.delta
    delta = (1 - b) / (a - b)
    return PlanePoint(R=b * (1 - delta), delta=delta)


def _polyline(vertices: List[PlanePoint]) -> List[Tuple[PlanePoint, str]]:
    first = vertices[0]
    line: List[Tuple[PlanePoint, str]] = []
    start = PlanePoint(R=first.R / (1 - first.delta), delta=Fraction(0))
    if start != PlanePoint(R=first.R, delta=first.delta):
        line.append((start, AXIS))
    for left, right in zip(vertices, vertices[1:]):
        line.append((PlanePoint(R=left.R, delta=left.delta), PEAK))
        line.append((_junction(left, right), JUNCTION))
    last = vertices[-1]
    line.append((PlanePoint(R=last.R, delta=last.delta), PEAK))
    if last.delta > 0:
        end = PlanePoint(R=Fraction(0), delta=last.delta / (1 - last.R))
        if end != PlanePoint(R=last.R, delta=last.delta):
            line.append((end, AXIS))
    return line


def empirical_envelope(points: Iterable[PlanePoint]) -> Envelope:
    """
    Строит огибающую нижних конусов точно в рациональных числах.

    Точки вне области R + delta < 1 исключаются с предупреждением; точка,
    лежащая в нижнем конусе другой, отбрасывается.

    Args:
        points: Непустой набор точек

    Returns:
        Огибающая

    Raises:
        PreconditionError: Если после фильтрации точек не осталось
    """
    candidates = []
    seen = set()
    excluded = 0
    for point in sorted(points, key=lambda p: (p.delta, -p.R, getattr(p, "tag", ""))):
        if not point.in_domain:
            excluded += 1
            continue
        key = (point.R, point.delta)
        if key in seen:
            continue
        seen.add(key)
        candidates.append(point)
    if excluded:
        logger.warning(f"⚠️ {excluded} точек вне области R + delta < 1 исключены из конусов")
    if not candidates:
        raise PreconditionError("Нет точек в области R + delta < 1 для построения огибающей")

    survivors = [
        p
        for p in candidates
        if not any(q is not p and lower_cone_contains(q, p) for q in candidates)
    ]
    survivors.sort(key=lambda p: (p.delta, -p.R))
    logger.debug(f"Огибающая: {len(survivors)} вершин из {len(candidates)} точек")
    return Envelope(vertices=tuple(survivors), polyline=tuple(_polyline(survivors)))
