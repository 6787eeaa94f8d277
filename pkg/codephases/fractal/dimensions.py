"""Размерности Хаусдорфа фрактала S_C и его сечений."""

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from codephases.codes import Code, ExactRate
from codephases.codes.code import real_log
from codephases.fractal.subspace import CoordinateSubspace, subspace_count
from codephases.internal.constants import DEFAULT_SAMPLED_SUBSETS, EXHAUSTIVE_SCAN_MAX_N
from codephases.internal.errors import PreconditionError
from codephases.internal.parallel import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntersectionDimension:
    """
    Размерность сечения log_q(count)/scale.

    count = 0 означает пустое множество, а не точку: value тогда None.
    """

    count: int
    scale: int
    value: Optional[float]

    @property
    def is_empty(self) -> bool:
        return self.count == 0


def intersection_dimension(count: int, scale: int, q: int) -> IntersectionDimension:
    """
    Размерность по числу слов в сечении.

    Raises:
        PreconditionError: Если scale = 0
    """
    if scale <= 0:
        raise PreconditionError("Размерность сечения не определена при ell = 0")
    if count == 0:
        return IntersectionDimension(count=0, scale=scale, value=None)
    return IntersectionDimension(count=count, scale=scale, value=real_log(count, q) / scale)


@dataclass(frozen=True)
class FractalDimensions:
    """Размерности S_C, S_pi, S_C ∩ pi (делитель ell) и S_C ∩ S_pi (делитель n)."""

    dim_SC: float
    dim_Spi: Fraction
    dim_SC_cap_pi: IntersectionDimension
    dim_SC_cap_Spi: IntersectionDimension


def fractal_dimensions(code: Code, pi: CoordinateSubspace) -> FractalDimensions:
    """
    Все размерности для пары (код, подпространство).

    Args:
        code: Код
        pi: Подпространство той же длины

    Returns:
        Четыре размерности; пустые сечения помечены явно
    """
    count = subspace_count(code, pi)
    return FractalDimensions(
        dim_SC=code.params.R,
        dim_Spi=Fraction(pi.ell, code.n),
        dim_SC_cap_pi=intersection_dimension(count, pi.ell, code.q),
        dim_SC_cap_Spi=intersection_dimension(count, code.n, code.q),
    )


def box_count_estimate(code: Code, depth: int) -> ExactRate:
    """
    Оценка размерности по числу ящиков (#C)^depth стороны q^-depth.

    Returns:
        Точное значение log_q((#C)^depth)/(depth*n)
    """
    if depth < 1:
        raise PreconditionError(f"depth={depth} < 1")
    return ExactRate(code.q, code.size**depth, depth * code.n)


@dataclass(frozen=True)
class ThresholdScan:
    """Максимум #(C ∩ pi) по pi из Pi_ell для каждого ell."""

    d: int
    max_counts: Dict[int, int]
    sampled: bool = False
    subsets: Dict[int, int] = field(default_factory=dict)

    @property
    def threshold(self) -> Optional[int]:
        """Наименьшее ell с максимумом >= 2."""
        return next((ell for ell in sorted(self.max_counts) if self.max_counts[ell] >= 2), None)

    def check(self) -> None:
        """
        Проверяет порог: максимум <= 1 при ell < d и >= 2 при ell >= d.

        Raises:
            PreconditionError: Если порог нарушен
        """
        for ell, count in self.max_counts.items():
            if ell < self.d and count > 1:
                raise PreconditionError(f"ell={ell} < d={self.d}, но найдено {count} слов")
            if ell >= self.d and count < 2 and not self.sampled:
                raise PreconditionError(f"ell={ell} >= d={self.d}, но максимум {count}")


def _groups(code: Code, fixed_columns: Tuple[int, ...]) -> Tuple[np.ndarray, np.ndarray]:
    if not fixed_columns:
        return np.zeros((1, 0), dtype=np.int64), np.array([code.size])
    return np.unique(code.matrix[:, list(fixed_columns)], axis=0, return_counts=True)


def _column_subsets(n: int, ell: int, sampled: bool, rng: np.random.Generator, samples: int):
    size = n - ell
    if not sampled or math.comb(n, size) <= samples:
        return list(itertools.combinations(range(n), size))
    chosen = set()
    while len(chosen) < samples:
        chosen.add(tuple(sorted(int(i) for i in rng.choice(n, size=size, replace=False))))
    return sorted(chosen)


def threshold_scan(
    code: Code,
    threads: int = 1,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLED_SUBSETS,
) -> ThresholdScan:
    """
    Таблица ell -> max #(C ∩ pi) группировкой слов по проекциям.

    Для n больше порога полного перебора подмножества координат выбираются
    случайно, и максимумы становятся нижними оценками.

    Args:
        code: Код с #C >= 2
        threads: Потоки для перебора по ell
        seed: Зерно выборки подмножеств
        samples: Число подмножеств на каждое ell в режиме выборки

    Returns:
        Результат сканирования (проверка порога выполняется check())
    """
    if code.size < 2:
        raise PreconditionError("Сканирование порога требует #C >= 2")
    sampled = code.n > EXHAUSTIVE_SCAN_MAX_N
    if sampled:
        logger.warning(
            f"⚠️ n={code.n} > {EXHAUSTIVE_SCAN_MAX_N}: подмножества координат выбираются случайно"
        )
    rng = np.random.default_rng(seed)
    plan = [(ell, _column_subsets(code.n, ell, sampled, rng, samples)) for ell in range(code.n + 1)]

    def scan(item: Tuple[int, List[Tuple[int, ...]]]) -> int:
        _, subsets = item
        return max(int(_groups(code, columns)[1].max()) for columns in subsets)

    maxima = parallel_map(scan, plan, threads)
    result = ThresholdScan(
        d=int(code.distance or 0),
        max_counts={ell: value for (ell, _), value in zip(plan, maxima)},
        sampled=sampled,
        subsets={ell: len(subsets) for ell, subsets in plan},
    )
    result.check()
    return result


def scan_subspaces(code: Code, ell: int) -> List[Tuple[CoordinateSubspace, int]]:
    """
    Все pi из Pi_ell, пересекающие код, с числом слов в пересечении.

    Args:
        code: Код
        ell: Размерность подпространств, 0 <= ell <= n

    Returns:
        Пары (pi, count) с count >= 1 в детерминированном порядке
    """
    if not 0 <= ell <= code.n:
        raise PreconditionError(f"ell={ell} вне [0, {code.n}]")
    pairs = []
    for columns in itertools.combinations(range(code.n), code.n - ell):
        values, counts = _groups(code, columns)
        for row, count in zip(values.tolist(), counts.tolist()):
            fixed = tuple((column + 1, digit) for column, digit in zip(columns, row))
            pairs.append((CoordinateSubspace(n=code.n, fixed=fixed), int(count)))
    return pairs
