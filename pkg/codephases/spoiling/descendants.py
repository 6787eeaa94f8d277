"""Перечисление потомков кода под численной порчей."""

import logging
from typing import FrozenSet, List, Set

from codephases.codes import Code
from codephases.internal.errors import PreconditionError
from codephases.internal.parallel import parallel_map
from codephases.plane.points import CodePoint
from codephases.spoiling.numeric import numeric_spoil
from codephases.spoiling.operations import SpoilKind

logger = logging.getLogger(__name__)


def _children(code: Code) -> List[Code]:
    children = []
    for kind in SpoilKind:
        try:
            children.append(numeric_spoil(code, kind).code)
        except PreconditionError:
            continue
    return children


def spoil_descendants(code: Code, steps: int, threads: int = 1) -> FrozenSet[CodePoint]:
    """
    Точки всех кодов, достижимых не более чем steps численными порчами.

    Ветви с нарушенными предусловиями пропускаются; точки сравниваются как
    точные рациональные пары (R, delta).

    Args:
        code: Исходный код
        steps: Число шагов (>= 0)
        threads: Потоки для обхода фронта

    Returns:
        Множество точек кодов
    """
    if steps < 0:
        raise PreconditionError(f"steps={steps} < 0")
    seen: Set[Code] = {code}
    frontier = [code]
    points: Set[CodePoint] = set()
    if code.size >= 2:
        points.add(CodePoint.from_code(code, tag="step0"))

    for step in range(1, steps + 1):
        expanded = parallel_map(_children, frontier, threads)
        next_frontier: Set[Code] = set()
        for children in expanded:
            for child in children:
                if child in seen:
                    continue
                seen.add(child)
                next_frontier.add(child)
                if child.size >= 2:
                    point = CodePoint.from_code(child, tag=f"step{step}")
                    if point not in points:
                        points.add(point)
        frontier = sorted(next_frontier, key=lambda c: (c.n, c.size, c.words))
        logger.debug(f"Шаг {step}: {len(frontier)} новых кодов, {len(points)} точек")
    return frozenset(points)
