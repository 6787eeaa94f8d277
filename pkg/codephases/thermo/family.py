"""Семейства кодов, дзета-функции семейств и ряд Lambda(beta)."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from codephases.codes import Code, ExactRate
from codephases.internal.constants import SERIES_DEFAULT_TERMS, TOLERANCE
from codephases.internal.errors import InputError, PreconditionError
from codephases.thermo.critical import critical_beta
from codephases.thermo.values import PartitionStatus, PartitionValue
from codephases.thermo.weights import Weights

logger = logging.getLogger(__name__)

# Порог экспоненты, выше которого слагаемое считается бесконечным
_MAX_LOG_FLOAT: float = 700.0


@dataclass(frozen=True)
class FamilyMember:
    """Параметры (n_r, #C_r, d_r) одного кода семейства и сам код, если он есть."""

    q: int
    n: int
    size: int
    d: Optional[int]
    code: Optional[Code] = None

    def __post_init__(self) -> None:
        if self.n < 1 or self.size < 1:
            raise InputError(f"Некорректные параметры n={self.n}, size={self.size}")
        if self.size > self.q**self.n:
            raise InputError(f"size={self.size} превышает q^n = {self.q}^{self.n}")

    @classmethod
    def from_code(cls, code: Code) -> "FamilyMember":
        return cls(q=code.q, n=code.n, size=code.size, d=code.params.d, code=code)

    @property
    def rate(self) -> ExactRate:
        return ExactRate(self.q, self.size, self.n)

    @property
    def delta(self) -> Optional[Fraction]:
        return None if self.d is None else Fraction(self.d, self.n)

    def log_term(self, beta: float) -> float:
        """ln(q^(k_r - beta n_r))."""
        return math.log(self.size) - beta * self.n * math.log(self.q)


@dataclass(frozen=True)
class CodeFamily:
    """
    Упорядоченное семейство кодов C_r над общим алфавитом.

    При monotone=True проверяется, что k_r/n_r (точно, через степени) и d_r/n_r
    не убывают.
    """

    q: int
    members: Tuple[FamilyMember, ...]
    monotone: bool = False

    def __post_init__(self) -> None:
        if not self.members:
            raise PreconditionError("Семейство пусто")
        for member in self.members:
            if member.q != self.q:
                raise InputError(f"Код над q={member.q} в семействе над q={self.q}")
        if self.monotone:
            self._check_monotone()

    def _check_monotone(self) -> None:
        for prev, curr in zip(self.members, self.members[1:]):
            if curr.rate < prev.rate:
                raise PreconditionError(
                    f"Скорость убывает: {prev.size}^(1/{prev.n}) > {curr.size}^(1/{curr.n})"
                )
            if prev.delta is not None and curr.delta is not None and curr.delta < prev.delta:
                raise PreconditionError(f"d/n убывает: {prev.delta} > {curr.delta}")

    @classmethod
    def from_codes(cls, codes: Sequence[Code], monotone: bool = False) -> "CodeFamily":
        if not codes:
            raise PreconditionError("Семейство пусто")
        members = tuple(FamilyMember.from_code(code) for code in codes)
        return cls(q=codes[0].q, members=members, monotone=monotone)

    @classmethod
    def from_parameters(
        cls,
        q: int,
        parameters: Sequence[Tuple[int, int, Optional[int]]],
        monotone: bool = False,
    ) -> "CodeFamily":
        """Семейство только из параметров (n_r, #C_r, d_r) без слов."""
        members = tuple(FamilyMember(q=q, n=n, size=size, d=d) for n, size, d in parameters)
        return cls(q=q, members=members, monotone=monotone)

    def __len__(self) -> int:
        return len(self.members)

    def rate_sup(self) -> ExactRate:
        """Точный максимум k_r/n_r."""
        return max(member.rate for member in self.members)

    def lengths_increasing(self) -> bool:
        return all(b.n > a.n for a, b in zip(self.members, self.members[1:]))


def family_dimension(family: CodeFamily) -> float:
    """sup_r k_r/n_r."""
    return float(family.rate_sup())


def _term(log_value: float) -> float:
    return math.inf if log_value > _MAX_LOG_FLOAT else math.exp(log_value)


def family_zeta(
    family: CodeFamily, beta: float, terms: int = SERIES_DEFAULT_TERMS
) -> PartitionValue:
    """
    Частичная сумма дзета-функции семейства sum_r q^(k_r - beta n_r).

    Классификация:
        - сходится, если beta > sup k_r/n_r и n_r строго возрастают; хвост
          оценивается геометрической мажорантой с отношением q^((R - beta) min(n_{r+1} - n_r));
        - расходится, если beta <= sup k_r/n_r и слагаемые не убывают в конце;
        - иначе "unclassified" без догадок.

    Args:
        family: Непустое семейство
        beta: Обратная температура
        terms: Число учитываемых членов семейства

    Returns:
        Частичная сумма со статусом и оценкой хвоста
    """
    if terms < 1:
        raise InputError(f"terms={terms} должно быть >= 1")
    used = family.members[:terms]
    values = [_term(member.log_term(beta)) for member in used]
    partial = math.fsum(values) if all(math.isfinite(v) for v in values) else math.inf

    if len(family.members) == 1:
        return PartitionValue(beta, partial, PartitionStatus.CONVERGENT, 1, False, 0.0, partial)

    sup_rate = family_dimension(family)
    if beta > sup_rate and family.lengths_increasing():
        gap = min(b.n - a.n for a, b in zip(family.members, family.members[1:]))
        exponent = (sup_rate - beta) * math.log(family.q)
        ratio = math.exp(exponent * gap)
        tail = math.exp(exponent * (used[-1].n + gap)) / (1.0 - ratio)
        return PartitionValue(
            beta, partial, PartitionStatus.CONVERGENT, len(used), False, tail, partial
        )
    if beta <= sup_rate + TOLERANCE and len(values) >= 2 and values[-1] >= values[-2]:
        return PartitionValue(
            beta, None, PartitionStatus.DIVERGENT, len(used), False, None, partial
        )
    logger.warning(f"⚠️ Дзета-функция семейства при beta={beta} не классифицирована")
    return PartitionValue(
        beta, partial, PartitionStatus.UNCLASSIFIED, len(used), False, None, partial
    )


def family_weights(family: CodeFamily) -> Weights:
    """
    Веса lambda_a = n_r ln q на объединении кодов семейства.

    Буква получает вес по наименьшему r, в котором она встречается; для семейств без
    слов каждый код вносит #C_r новых букв.
    """
    log_q = math.log(family.q)
    seen: set = set()
    levels: List[Tuple[float, int]] = []
    for member in family.members:
        if member.code is None:
            levels.append((member.n * log_q, member.size))
            continue
        fresh = [word for word in member.code.words if word not in seen]
        seen.update(fresh)
        if fresh:
            levels.append((member.n * log_q, len(fresh)))
    return Weights.from_levels(levels)


def lambda_series(weights: Weights, beta: float) -> float:
    """Lambda(beta) = sum_a e^(-beta lambda_a)."""
    return weights.total(beta)


def family_partition(family: CodeFamily, beta: float) -> PartitionValue:
    """
    Статистическая сумма (1 - Lambda(beta))^(-1) системы на объединении семейства.

    Расходится при Lambda(beta) >= 1.
    """
    if not beta > 0:
        raise PreconditionError(f"beta={beta} должно быть положительным")
    level = lambda_series(family_weights(family), beta)
    if level >= 1.0 - TOLERANCE:
        return PartitionValue(beta, None, PartitionStatus.DIVERGENT, 0, True)
    value = 1.0 / (1.0 - level)
    return PartitionValue(beta, value, PartitionStatus.CONVERGENT, 0, True, 0.0, value)


def family_critical_beta(family: CodeFamily) -> float:
    """Решение Lambda(beta) = 1."""
    return critical_beta(family_weights(family))
