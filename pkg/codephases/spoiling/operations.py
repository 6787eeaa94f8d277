"""Три операции порчи кода: вставка, удаление и ограничение."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional, Tuple, Union

from codephases.codes import Code, Word
from codephases.internal.errors import InputError, PreconditionError

logger = logging.getLogger(__name__)


class SpoilKind(str, Enum):
    """Вид численной порчи."""

    I = "I"  # noqa: E741
    II = "II"
    III = "III"


@dataclass(frozen=True)
class Insert:
    """
    Вставка буквы f(x) на позицию position (1..n+1).

    Буква задается либо константой, либо таблицей слово -> цифра.
    """

    position: int
    constant: Optional[int] = None
    table: Optional[Mapping[Word, int]] = field(default=None, hash=False, compare=False)

    def letter(self, word: Word) -> int:
        if self.table is not None:
            return self.table[word]
        return int(self.constant or 0)


@dataclass(frozen=True)
class Delete:
    """Удаление координаты position (1..n)."""

    position: int


@dataclass(frozen=True)
class Restrict:
    """Подкод слов с цифрой letter на позиции position (1..n)."""

    letter: int
    position: int


SpoilOp = Union[Insert, Delete, Restrict]


@dataclass(frozen=True)
class SpoilOutcome:
    """Результат численной порчи с журналом примененных операций."""

    code: Code
    kind: SpoilKind
    branch: str
    ops: Tuple[SpoilOp, ...]


def _check_position(position: int, upper: int) -> None:
    if not 1 <= position <= upper:
        raise InputError(f"Позиция {position} вне диапазона [1, {upper}]")


def apply_spoiling(code: Code, op: SpoilOp) -> Code:
    """
    Применяет одну операцию порчи.

    Args:
        code: Исходный код
        op: Insert, Delete или Restrict

    Returns:
        Новый код; Delete склеивает совпавшие образы

    Raises:
        InputError: Позиция вне диапазона, цифра вне алфавита или неполная таблица
        PreconditionError: Пустой результат
    """
    if isinstance(op, Insert):
        _check_position(op.position, code.n + 1)
        if op.table is not None:
            missing = [w for w in code.words if w not in op.table]
            if missing:
                raise InputError(f"Таблица вставки не покрывает {len(missing)} слов")
        i = op.position - 1
        words = []
        for word in code.words:
            letter = op.letter(word)
            if not 0 <= letter < code.q:
                raise InputError(f"Вставляемая цифра {letter} вне [0, {code.q})")
            words.append(word[:i] + (letter,) + word[i:])
        return Code.from_words(code.q, words, n=code.n + 1)

    if isinstance(op, Delete):
        _check_position(op.position, code.n)
        if code.n == 1:
            raise PreconditionError("Удаление единственной координаты дает пустые слова")
        i = op.position - 1
        return Code.from_words(code.q, (w[:i] + w[i + 1 :] for w in code.words), n=code.n - 1)

    if isinstance(op, Restrict):
        _check_position(op.position, code.n)
        i = op.position - 1
        words = [w for w in code.words if w[i] == op.letter]
        if not words:
            raise PreconditionError(
                f"Ни одно слово не имеет цифру {op.letter} на позиции {op.position}"
            )
        return Code.from_words(code.q, words, n=code.n)

    raise InputError(f"Неизвестная операция порчи: {op!r}")


def restrict_classes(code: Code, position: int) -> Dict[int, Code]:
    """
    Разбиение кода на классы C(a, i) по цифре на позиции i.

    Returns:
        Непустые классы по возрастанию цифры
    """
    _check_position(position, code.n)
    counts = Counter(word[position - 1] for word in code.words)
    return {a: apply_spoiling(code, Restrict(a, position)) for a in sorted(counts)}


def class_sizes(code: Code, position: int) -> List[int]:
    """Размеры классов C(a, i) для всех цифр a алфавита."""
    _check_position(position, code.n)
    counts = Counter(word[position - 1] for word in code.words)
    return [counts.get(a, 0) for a in range(code.q)]
