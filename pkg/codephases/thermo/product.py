"""Произведения систем с переменной температурой."""

import itertools
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from codephases.codes import Code
from codephases.internal.errors import PreconditionError
from codephases.internal.parallel import parallel_map
from codephases.thermo.partition import partition_function
from codephases.thermo.values import PartitionValue


@dataclass(frozen=True)
class ProductPartition:
    """Произведение статистических сумм; value = None при расходимости любого множителя."""

    betas: Tuple[float, ...]
    value: Optional[float]
    factors: Tuple[PartitionValue, ...]

    @property
    def is_divergent(self) -> bool:
        return self.value is None


def product_partition(systems: Sequence[Tuple[Code, float]]) -> ProductPartition:
    """
    Произведение замкнутых форм Z_{C_j}(beta_j).

    Args:
        systems: Непустой список пар (код, beta_j)

    Returns:
        Произведение или расходимость
    """
    if not systems:
        raise PreconditionError("Список систем пуст")
    factors = tuple(partition_function(code, beta) for code, beta in systems)
    betas = tuple(float(beta) for _, beta in systems)
    if any(factor.is_divergent for factor in factors):
        return ProductPartition(betas, None, factors)
    value = math.prod(factor.value for factor in factors)  # type: ignore[misc]
    return ProductPartition(betas, value, factors)


def product_grid(
    codes: Sequence[Code], grids: Sequence[Sequence[float]], threads: int = 1
) -> List[ProductPartition]:
    """
    Скан по декартовой решетке температур для N систем.

    Args:
        codes: Коды систем
        grids: Решетка beta для каждой системы
        threads: Потоки для перебора ячеек

    Returns:
        Значения в лексикографическом порядке ячеек
    """
    if len(codes) != len(grids):
        raise PreconditionError("Число решеток не совпадает с числом систем")
    cells = list(itertools.product(*grids))
    return parallel_map(lambda cell: product_partition(list(zip(codes, cell))), cells, threads)
