"""Стратегии численной порчи видов I, II и III."""

import logging
from abc import ABC, abstractmethod
from typing import List, Sequence, Tuple

import numpy as np

from codephases.codes import Code, min_distance_pairs
from codephases.internal.errors import PreconditionError
from codephases.spoiling.operations import (
    Delete,
    Insert,
    Restrict,
    SpoilKind,
    SpoilOp,
    SpoilOutcome,
    apply_spoiling,
    class_sizes,
)

logger = logging.getLogger(__name__)


class SpoilStrategy(ABC):
    """Базовый класс для стратегий численной порчи."""

    kind: SpoilKind

    @abstractmethod
    def check(self, code: Code) -> None:
        """
        Проверяет предусловия порчи.

        Raises:
            PreconditionError: Если порча неприменима
        """

    @abstractmethod
    def spoil(self, code: Code) -> SpoilOutcome:
        """
        Портит код, сохраняя журнал операций.

        Args:
            code: Исходный код

        Returns:
            Результат с новым кодом, веткой и журналом
        """


class ConstantInsertStrategy(SpoilStrategy):
    """Вид I: [n+1, k, d] вставкой константы 0 на позицию 1."""

    kind = SpoilKind.I

    def check(self, code: Code) -> None:
        return None

    def spoil(self, code: Code) -> SpoilOutcome:
        op = Insert(position=1, constant=0)
        return SpoilOutcome(apply_spoiling(code, op), self.kind, "always", (op,))


class CoordinateDeleteStrategy(SpoilStrategy):
    """
    Вид II: удаление координаты.

    При d >= 2 удаляется наименьшая позиция, где различается какая-нибудь пара
    на минимальном расстоянии: получается [n-1, k, d-1]. При d = 1 удаляется
    наименьшая позиция, где все такие пары совпадают: [n-1, k, d].
    """

    kind = SpoilKind.II

    def check(self, code: Code) -> None:
        if code.n <= 1:
            raise PreconditionError("Вид II требует n > 1")
        if code.size < 2:
            raise PreconditionError("Вид II требует #C >= 2")

    def spoil(self, code: Code) -> SpoilOutcome:
        self.check(code)
        separated = set()
        for a, b in min_distance_pairs(code):
            separated.update(i for i in range(code.n) if a[i] != b[i])
        if code.distance is not None and code.distance >= 2:
            position = min(separated)
            branch = "d-1"
        else:
            free = [i for i in range(code.n) if i not in separated]
            if not free:
                raise PreconditionError(
                    "d = 1 и каждая позиция разделяет пару на расстоянии 1: удаление склеит слова"
                )
            position = free[0]
            branch = "d"
        op = Delete(position + 1)
        return SpoilOutcome(apply_spoiling(code, op), self.kind, branch, (op,))


class RateReduceStrategy(SpoilStrategy):
    """
    Вид III: [n-1, k', d] с q^([k]-1) <= #C' < #C.

    Максимальная проекция с сохранением #C и d, ограничение на класс
    размера >= #C/q, удаление этой позиции, затем починка d проходами
    видов II и I и добивка длины вставками констант.
    """

    kind = SpoilKind.III

    def check(self, code: Code) -> None:
        if code.n <= 1:
            raise PreconditionError("Вид III требует n > 1")
        if code.size <= code.q:
            raise PreconditionError("Вид III требует k > 1")

    def spoil(self, code: Code) -> SpoilOutcome:
        self.check(code)
        target_d = code.distance
        ops: List[SpoilOp] = []
        current = code

        kept = maximal_projection(code)
        for coordinate in sorted(set(range(code.n)) - set(kept), reverse=True):
            op = Delete(coordinate + 1)
            current = apply_spoiling(current, op)
            ops.append(op)

        position = next(
            i for i in range(1, current.n + 1) if sum(1 for s in class_sizes(current, i) if s) >= 2
        )
        sizes = class_sizes(current, position)
        letter = next(a for a, s in enumerate(sizes) if s * current.q >= current.size)
        for op in (Restrict(letter, position), Delete(position)):
            current = apply_spoiling(current, op)
            ops.append(op)

        delete_strategy = CoordinateDeleteStrategy()
        insert_strategy = ConstantInsertStrategy()
        while current.distance is not None and target_d is not None and current.distance > target_d:
            for strategy in (delete_strategy, insert_strategy):
                outcome = strategy.spoil(current)
                current = outcome.code
                ops.extend(outcome.ops)

        while current.n < code.n - 1:
            outcome = insert_strategy.spoil(current)
            current = outcome.code
            ops.extend(outcome.ops)

        logger.debug(
            f"Вид III: [{code.n}, {code.size}, {target_d}] -> "
            f"[{current.n}, {current.size}, {current.distance}] за {len(ops)} операций"
        )
        return SpoilOutcome(current, self.kind, "reduce", tuple(ops))


def maximal_projection(code: Code) -> Tuple[int, ...]:
    """
    Наименьший найденный набор координат, проекция на который сохраняет #C и d.

    Жадное удаление координат, n попыток с циклическим сдвигом порядка обхода.

    Args:
        code: Код с #C >= 2

    Returns:
        Сохраняемые координаты (с нуля) по возрастанию
    """
    d = code.distance
    if d is None:
        return tuple(range(code.n))
    rows, cols = np.triu_indices(code.size, k=1)
    differs = code.matrix[rows] != code.matrix[cols]
    base = differs.sum(axis=1)

    best: Sequence[int] = tuple(range(code.n))
    for start in range(code.n):
        kept = list(range(code.n))
        distances = base.copy()
        for j in [(start + offset) % code.n for offset in range(code.n)]:
            if len(kept) == 1:
                break
            trial = distances - differs[:, j]
            if trial.min() == d:
                kept.remove(j)
                distances = trial
        if len(kept) < len(best):
            best = tuple(sorted(kept))
    return tuple(best)


def get_spoil_strategy(kind: SpoilKind) -> SpoilStrategy:
    """
    Возвращает стратегию для указанного вида порчи.

    Args:
        kind: Вид I, II или III

    Returns:
        Стратегия численной порчи
    """
    kind = SpoilKind(kind)
    if kind is SpoilKind.I:
        return ConstantInsertStrategy()
    if kind is SpoilKind.II:
        return CoordinateDeleteStrategy()
    return RateReduceStrategy()


__all__ = [
    "ConstantInsertStrategy",
    "CoordinateDeleteStrategy",
    "RateReduceStrategy",
    "SpoilStrategy",
    "get_spoil_strategy",
    "maximal_projection",
]
