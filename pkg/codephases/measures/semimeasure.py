"""Перенос равномерной меры монотонными отображениями, смеси и критическая температура полумер."""

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, Mapping, Sequence, Tuple

import numpy as np
from scipy.spatial.distance import cdist

from codephases.codes import Code, Word
from codephases.codes.code import floor_log
from codephases.fractal.similarity import similarity_dimension
from codephases.internal.constants import DEFAULT_DEPTH_CAP, TOLERANCE
from codephases.internal.errors import InputError, PreconditionError
from codephases.measures.cylinder import (
    CylinderAssignment,
    CylinderWord,
    Number,
    cylinder_words,
)
from codephases.measures.potential import Potential
from codephases.thermo.values import PartitionStatus, PartitionValue

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonotoneMap:
    """
    Отображение f блоков длины block над A = {0..source_q-1} в буквы целевого кода.

    Продолжается мультипликативно: f(w w') = f(w) f(w').
    """

    source_q: int
    block: int
    table: Mapping[Word, Word]
    targets: Tuple[Word, ...]

    def __post_init__(self) -> None:
        if self.source_q < 2 or self.block < 1:
            raise InputError(f"Некорректный источник q={self.source_q}, block={self.block}")
        if len(self.table) != self.source_q**self.block:
            raise InputError("Таблица должна покрывать все блоки источника")
        known = set(self.targets)
        if any(value not in known for value in self.table.values()):
            raise InputError("Значение таблицы вне целевых букв")

    @classmethod
    def encoder(cls, code: Code) -> "MonotoneMap":
        """Биекция A^k -> C в лексикографическом порядке; требует #C = q^k."""
        k = floor_log(code.size, code.q)
        if code.q**k != code.size:
            raise PreconditionError(f"#C={code.size} не является степенью q={code.q}")
        targets = tuple(sorted(code.words))
        blocks = itertools.product(range(code.q), repeat=k)
        return cls(code.q, k, dict(zip(blocks, targets)), targets)

    @classmethod
    def decoder(cls, code: Code) -> "MonotoneMap":
        """
        Декодер в ближайшее кодовое слово по Хэммингу.

        При равенстве расстояний выбирается лексикографически наименьшее слово.
        """
        targets = tuple(sorted(code.words))
        blocks = list(itertools.product(range(code.q), repeat=code.n))
        distances = cdist(np.array(blocks), np.array(targets), metric="hamming")
        nearest = np.argmin(distances, axis=1)
        return cls(code.q, code.n, {b: targets[i] for b, i in zip(blocks, nearest)}, targets)

    def apply(self, word: Sequence[int]) -> CylinderWord:
        if len(word) % self.block:
            raise InputError(f"Длина {len(word)} не кратна блоку {self.block}")
        word = tuple(word)
        return tuple(
            self.table[word[start : start + self.block]]
            for start in range(0, len(word), self.block)
        )

    def preimage_counts(self) -> Dict[Word, int]:
        counts = Counter(self.table.values())
        return {target: counts.get(target, 0) for target in self.targets}


def pushforward_semimeasure(
    f: MonotoneMap, depth: int, exact: bool = True
) -> CylinderAssignment:
    """
    Образ равномерной меры q^(-|w|) при f.

    mu_f(u_1...u_j) = prod_i #f^(-1)(u_i) * q^(-block j); буквы без прообраза
    получают 0.

    Args:
        f: Блочное монотонное отображение
        depth: Глубина назначения
        exact: Значения Fraction вместо float

    Returns:
        Назначение на буквах f.targets
    """
    if not 0 <= depth <= DEFAULT_DEPTH_CAP:
        raise PreconditionError(f"depth={depth} вне [0, {DEFAULT_DEPTH_CAP}]")
    scale = f.source_q**f.block
    letter_mass: Dict[Word, Number] = {
        target: Fraction(count, scale) if exact else count / scale
        for target, count in f.preimage_counts().items()
    }
    one: Number = Fraction(1) if exact else 1.0
    values: Dict[CylinderWord, Number] = {}
    for length in range(depth + 1):
        for word in cylinder_words(f.targets, length):
            values[word] = math.prod((letter_mass[u] for u in word), start=one)
    return CylinderAssignment(f.targets, depth, values)


def mixture_semimeasure(
    components: Sequence[CylinderAssignment], alphas: Sequence[Number]
) -> CylinderAssignment:
    """
    Поточечная комбинация sum_i alpha_i mu_i при alpha_i > 0 и sum alpha_i <= 1.

    Raises:
        PreconditionError: Если sum alpha > 1 или компоненты несовместимы
    """
    if not components or len(components) != len(alphas):
        raise PreconditionError("Число компонент и коэффициентов должно совпадать")
    if any(not alpha > 0 for alpha in alphas):
        raise PreconditionError("Коэффициенты смеси должны быть положительны")
    exact = all(isinstance(alpha, (Fraction, int)) for alpha in alphas)
    if sum(alphas) > 1 + (0 if exact else TOLERANCE):
        raise PreconditionError(f"Сумма коэффициентов {sum(alphas)} больше 1")
    first = components[0]
    if any(c.letters != first.letters or c.depth != first.depth for c in components):
        raise PreconditionError("Компоненты смеси должны иметь общие буквы и глубину")
    keys = set().union(*(c.values for c in components))
    values = {
        word: sum(alpha * c.value(word) for alpha, c in zip(alphas, components)) for word in keys
    }
    return CylinderAssignment(first.letters, first.depth, values)


def _check_letter_masses(mu_letters: Mapping[Hashable, Number]) -> np.ndarray:
    if not mu_letters:
        raise PreconditionError("Нет ни одной буквы")
    values = np.array([float(value) for value in mu_letters.values()])
    if np.any(values <= 0.0) or np.any(values >= 1.0):
        raise PreconditionError("Массы букв должны лежать в (0, 1)")
    if math.fsum(values) > 1.0 + TOLERANCE:
        raise PreconditionError(f"Сумма масс {math.fsum(values)} больше 1")
    return values


def critical_beta_semimeasure(mu_letters: Mapping[Hashable, Number]) -> float:
    """
    Критическое beta_c из (0, 1] с sum_a mu(a)^beta_c = 1.

    Для полной массы 1 возвращается 1.0.
    """
    values = _check_letter_masses(mu_letters)
    if abs(math.fsum(values) - 1.0) <= TOLERANCE:
        return 1.0
    return similarity_dimension(values.tolist())


def renormalize_semimeasure(mu_letters: Mapping[Word, Number]) -> Tuple[float, Potential]:
    """
    Повышение температуры до beta_c: потенциал W(a) = mu(a)^beta_c.

    Returns:
        beta_c и потенциал Кина

    Raises:
        PreconditionError: Если полученный потенциал не удовлетворяет условию Кина
    """
    beta_c = critical_beta_semimeasure(mu_letters)
    pot = Potential.from_weights({a: float(value) ** beta_c for a, value in mu_letters.items()})
    if not pot.is_keane():
        raise PreconditionError(f"Перенормировка не дала потенциал Кина: {pot.keane_sums()}")
    return beta_c, pot


def semimeasure_partition(mu_letters: Mapping[Hashable, Number], beta: float) -> PartitionValue:
    """(1 - sum_a mu(a)^beta)^(-1); расходится при beta <= beta_c."""
    values = _check_letter_masses(mu_letters)
    level = float(np.exp(beta * np.log(values)).sum())
    if level >= 1.0 - TOLERANCE:
        return PartitionValue(beta, None, PartitionStatus.DIVERGENT, 0, True)
    value = 1.0 / (1.0 - level)
    return PartitionValue(beta, value, PartitionStatus.CONVERGENT, 0, True, 0.0, value)


def semimeasure_kms_value(mu: CylinderAssignment, word: Sequence[Word], beta: float) -> float:
    """Значение mu(w)^beta состояния, построенного по полумере."""
    return float(mu.value(word)) ** beta
