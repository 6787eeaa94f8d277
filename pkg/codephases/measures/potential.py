"""Потенциалы W(x) глубины 1 и 2 и меры на цилиндрах, построенные по ним."""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Hashable, Mapping, Optional, Sequence, Tuple

from codephases.codes import Word
from codephases.internal.constants import DEFAULT_DEPTH_CAP, TOLERANCE
from codephases.internal.errors import InputError, PreconditionError
from codephases.internal.parallel import parallel_map
from codephases.measures.cylinder import CylinderAssignment, CylinderWord, Number


class PotentialKind(str, Enum):
    """Глубина зависимости потенциала от координат."""

    DEPTH1 = "depth1"
    DEPTH2 = "depth2"


@dataclass(frozen=True)
class SeedWord:
    """Финально периодическое бесконечное слово x0 = prefix + period + period + ..."""

    prefix: Tuple[Word, ...] = ()
    period: Tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        if not self.period:
            raise InputError("Период начального слова пуст")

    @classmethod
    def constant(cls, letter: Sequence[int]) -> "SeedWord":
        return cls(period=(tuple(letter),))

    def letter(self, index: int) -> Word:
        """Буква x0 с номером index (с нуля)."""
        if index < len(self.prefix):
            return self.prefix[index]
        return self.period[(index - len(self.prefix)) % len(self.period)]

    def first(self) -> Word:
        return self.letter(0)


@dataclass(frozen=True)
class Potential:
    """
    Потенциал W: значения e^(-beta lambda) по буквам (глубина 1) или парам (глубина 2).

    table хранит сами значения W; ключ глубины 2 - пара (a, b) для W(ab...).
    Значения Fraction дают точные меры.
    """

    letters: Tuple[Word, ...]
    kind: PotentialKind
    table: Mapping[Hashable, Number]
    beta: float = 1.0

    def __post_init__(self) -> None:
        if not self.letters:
            raise InputError("Потенциал без букв")
        if self.kind is PotentialKind.DEPTH1:
            keys = set(self.letters)
        else:
            keys = {(a, b) for a in self.letters for b in self.letters}
        if set(self.table) != keys:
            raise InputError("Таблица потенциала должна покрывать все буквы (пары букв)")
        if any(not value > 0 for value in self.table.values()):
            raise PreconditionError("Значения потенциала должны быть положительны")

    @classmethod
    def from_lambdas(
        cls,
        lambdas: Mapping[Hashable, float],
        beta: float,
        letters: Optional[Sequence[Word]] = None,
    ) -> "Potential":
        """
        Потенциал W = e^(-beta lambda).

        Args:
            lambdas: lambda_a по буквам или lambda_ab по парам
            beta: Обратная температура
            letters: Порядок букв; по умолчанию из ключей
        """
        kind = _detect_kind(lambdas)
        if letters is None:
            letters = _letters_from_keys(lambdas, kind)
        if any(not value > 0 for value in lambdas.values()):
            raise InputError("Веса lambda должны быть положительны")
        table = {key: math.exp(-beta * value) for key, value in lambdas.items()}
        return cls(tuple(letters), kind, table, beta)

    @classmethod
    def from_weights(
        cls, weights: Mapping[Hashable, Number], letters: Optional[Sequence[Word]] = None
    ) -> "Potential":
        """Потенциал по готовым значениям W (beta = 1)."""
        kind = _detect_kind(weights)
        if letters is None:
            letters = _letters_from_keys(weights, kind)
        return cls(tuple(letters), kind, dict(weights), 1.0)

    def weight(self, letter: Word, context: Optional[Word] = None) -> Number:
        """W(a x) для буквы a и следующей за ней буквы x_1 = context."""
        if self.kind is PotentialKind.DEPTH1:
            return self.table[letter]
        if context is None:
            raise PreconditionError("Потенциал глубины 2 требует следующую букву")
        return self.table[(letter, context)]

    def lambdas(self) -> Dict[Hashable, float]:
        """lambda = -ln W / beta."""
        return {key: -math.log(value) / self.beta for key, value in self.table.items()}

    def keane_sums(self) -> Dict[Optional[Word], Number]:
        """Суммы sum_a W(a b) для каждой b (ключ None для глубины 1)."""
        if self.kind is PotentialKind.DEPTH1:
            return {None: sum(self.table[a] for a in self.letters)}
        return {b: sum(self.table[(a, b)] for a in self.letters) for b in self.letters}

    @property
    def is_exact(self) -> bool:
        return all(isinstance(value, (Fraction, int)) for value in self.table.values())

    def is_keane(self, tolerance: float = TOLERANCE) -> bool:
        tol = 0 if self.is_exact else tolerance
        return all(abs(total - 1) <= tol for total in self.keane_sums().values())

    def is_subkeane(self, tolerance: float = TOLERANCE) -> bool:
        tol = 0 if self.is_exact else tolerance
        return all(total <= 1 + tol for total in self.keane_sums().values())


def _detect_kind(table: Mapping[Hashable, object]) -> PotentialKind:
    if not table:
        raise InputError("Таблица потенциала пуста")
    key = next(iter(table))
    if isinstance(key, tuple) and len(key) == 2 and all(isinstance(part, tuple) for part in key):
        return PotentialKind.DEPTH2
    return PotentialKind.DEPTH1


def _letters_from_keys(table: Mapping[Hashable, object], kind: PotentialKind) -> Tuple[Word, ...]:
    if kind is PotentialKind.DEPTH1:
        return tuple(sorted(table))  # type: ignore[type-var]
    return tuple(sorted({a for a, _ in table} | {b for _, b in table}))  # type: ignore[misc]


def _product_assignment(
    pot: Potential, x0: SeedWord, depth: int, threads: int
) -> CylinderAssignment:
    if depth < 0 or depth > DEFAULT_DEPTH_CAP:
        raise PreconditionError(f"depth={depth} вне [0, {DEFAULT_DEPTH_CAP}]")
    if pot.kind is PotentialKind.DEPTH2 and x0.first() not in pot.letters:
        raise InputError(f"Начальная буква {x0.first()} не принадлежит потенциалу")
    one: Number = Fraction(1) if pot.is_exact else 1.0
    values: Dict[CylinderWord, Number] = {(): one}
    layer = [()]
    for _ in range(depth):

        def extend(word: CylinderWord) -> Dict[CylinderWord, Number]:
            context = word[-1] if word else x0.first()
            return {word + (a,): values[word] * pot.weight(a, context) for a in pot.letters}

        for chunk in parallel_map(extend, layer, threads):
            values.update(chunk)
        layer = [word + (a,) for word in layer for a in pot.letters]
    return CylinderAssignment(pot.letters, depth, values)


def measure_from_potential(
    pot: Potential, x0: SeedWord, depth: int, threads: int = 1
) -> CylinderAssignment:
    """
    Мера mu(w_1...w_j) = W(w_1 x0) W(w_2 w_1 x0) ... W(w_j ... w_1 x0).

    Для потенциала Кина массы слоев равны 1 и mu(w) = sum_a mu(wa).

    Args:
        pot: Потенциал, удовлетворяющий условию Кина
        x0: Начальное бесконечное слово
        depth: Глубина назначения
        threads: Потоки для построения слоя

    Returns:
        Назначение на цилиндрах

    Raises:
        PreconditionError: Если условие Кина не выполнено
    """
    if not pot.is_keane():
        raise PreconditionError(f"Потенциал не удовлетворяет условию Кина: {pot.keane_sums()}")
    return _product_assignment(pot, x0, depth, threads)


def potential_semimeasure(
    pot: Potential, x0: SeedWord, depth: int, threads: int = 1
) -> CylinderAssignment:
    """Та же формула произведения для потенциала с sum_a W(a x) <= 1: полумера."""
    if not pot.is_subkeane():
        raise PreconditionError(f"Сумма потенциала превосходит 1: {pot.keane_sums()}")
    return _product_assignment(pot, x0, depth, threads)
