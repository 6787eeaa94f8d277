"""Коды, их параметры и точное сравнение скоростей."""

import functools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial.distance import pdist

from codephases.codes.words import Word
from codephases.internal.errors import InputError, PreconditionError

logger = logging.getLogger(__name__)


def floor_log(size: int, q: int) -> int:
    """Наибольшее целое k с q^k <= size."""
    k = 0
    power = q
    while power <= size:
        k += 1
        power *= q
    return k


def real_log(size: int, q: int) -> float:
    """log_q(size); точное значение для степеней q."""
    k = floor_log(size, q)
    if q**k == size:
        return float(k)
    return math.log(size) / math.log(q)


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class ExactRate:
    """
    Точное значение log_q(size)/n.

    Равенство и порядок проверяются целочисленно: size1^n2 против size2^n1.
    """

    q: int
    size: int
    n: int

    def _check_base(self, other: "ExactRate") -> None:
        if self.q != other.q:
            raise PreconditionError(f"Скорости над разными алфавитами: q={self.q} и q={other.q}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactRate):
            return NotImplemented
        self._check_base(other)
        return self.size**other.n == other.size**self.n

    def __lt__(self, other: "ExactRate") -> bool:
        if not isinstance(other, ExactRate):
            return NotImplemented
        self._check_base(other)
        return self.size**other.n < other.size**self.n

    __hash__ = None  # type: ignore[assignment]

    def __float__(self) -> float:
        return real_log(self.size, self.q) / self.n

    def as_fraction(self) -> Optional[Fraction]:
        """Рациональное значение, если size является степенью q."""
        k = floor_log(self.size, self.q)
        if self.q**k != self.size:
            return None
        return Fraction(k, self.n)


@dataclass(frozen=True)
class CodeParams:
    """Параметры кода [n, k, d]_q."""

    q: int
    n: int
    size: int
    k_real: float
    k_floor: int
    d: Optional[int]
    R: float
    R_floor: Fraction
    delta: Optional[Fraction]
    rate: ExactRate


@dataclass(frozen=True)
class Code:
    """
    Конечное множество слов одной длины над алфавитом {0, ..., q-1}.

    Слова хранятся отсортированными и без повторов; минимальное расстояние
    вычисляется лениво и определено только при #C >= 2.
    """

    q: int
    n: int
    words: Tuple[Word, ...]

    def __post_init__(self) -> None:
        if self.q < 2:
            raise InputError(f"Размер алфавита q={self.q} меньше 2")
        if self.n < 1:
            raise InputError(f"Длина кода n={self.n} меньше 1")
        if not self.words:
            raise InputError("Код не содержит слов")
        for word in self.words:
            if len(word) != self.n:
                raise InputError(f"Слово {word} имеет длину {len(word)}, ожидалась {self.n}")
            if any(digit < 0 or digit >= self.q for digit in word):
                raise InputError(f"Слово {word} содержит цифру вне [0, {self.q})")
        if len(set(self.words)) != len(self.words):
            raise InputError("Слова кода должны быть различны")

    @classmethod
    def from_words(cls, q: int, words: Iterable[Sequence[int]], n: Optional[int] = None) -> "Code":
        """
        Строит код из произвольного набора слов, удаляя повторы.

        Args:
            q: Размер алфавита
            words: Слова (последовательности цифр)
            n: Длина; по умолчанию берется из первого слова

        Returns:
            Код с отсортированными словами
        """
        unique = sorted({tuple(int(digit) for digit in word) for word in words})
        if not unique:
            raise InputError("Код не содержит слов")
        return cls(q=q, n=len(unique[0]) if n is None else n, words=tuple(unique))

    @classmethod
    def from_symbols(
        cls, rows: Iterable[Sequence[Hashable]], alphabet: Sequence[Hashable]
    ) -> "Code":
        """
        Переносит код над произвольным алфавитом на цифры через биекцию.

        Args:
            rows: Слова как последовательности символов
            alphabet: Упорядоченный алфавит; i-й символ получает цифру i

        Returns:
            Код над {0, ..., len(alphabet)-1} с теми же параметрами
        """
        index = {symbol: position for position, symbol in enumerate(alphabet)}
        if len(index) != len(alphabet):
            raise InputError("Алфавит содержит повторяющиеся символы")
        try:
            words = [tuple(index[symbol] for symbol in row) for row in rows]
        except KeyError as e:
            raise InputError(f"Символ {e.args[0]!r} отсутствует в алфавите") from e
        return cls.from_words(len(alphabet), words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self.word_set

    @property
    def size(self) -> int:
        return len(self.words)

    @functools.cached_property
    def word_set(self) -> frozenset:
        return frozenset(self.words)

    @functools.cached_property
    def matrix(self) -> np.ndarray:
        """Матрица цифр размера #C x n."""
        return np.array(self.words, dtype=np.int64).reshape(self.size, self.n)

    @functools.cached_property
    def distances(self) -> np.ndarray:
        """Попарные расстояния в сжатом порядке scipy (i < j)."""
        if self.size < 2:
            return np.zeros(0, dtype=np.int64)
        return np.rint(pdist(self.matrix, metric="hamming") * self.n).astype(np.int64)

    @functools.cached_property
    def distance(self) -> Optional[int]:
        """Минимальное расстояние или None при #C < 2."""
        if self.size < 2:
            return None
        return int(self.distances.min())

    @functools.cached_property
    def params(self) -> CodeParams:
        return code_params(self)


def min_distance(code: Code) -> int:
    """
    Минимальное попарное расстояние Хэмминга.

    Raises:
        PreconditionError: Если в коде меньше двух слов
    """
    if code.distance is None:
        raise PreconditionError("Минимальное расстояние не определено при #C < 2")
    return code.distance


def min_distance_pairs(code: Code) -> List[Tuple[Word, Word]]:
    """Все неупорядоченные пары слов на минимальном расстоянии."""
    d = min_distance(code)
    rows, cols = np.triu_indices(code.size, k=1)
    hits = np.flatnonzero(code.distances == d)
    return [(code.words[rows[i]], code.words[cols[i]]) for i in hits]


def code_params(code: Code) -> CodeParams:
    """
    Вычисляет параметры [n, k, d]_q кода.

    Args:
        code: Код

    Returns:
        Параметры; d и delta равны None при #C < 2
    """
    k_floor = floor_log(code.size, code.q)
    k_real = real_log(code.size, code.q)
    d = code.distance
    return CodeParams(
        q=code.q,
        n=code.n,
        size=code.size,
        k_real=k_real,
        k_floor=k_floor,
        d=d,
        R=k_real / code.n,
        R_floor=Fraction(k_floor, code.n),
        delta=None if d is None else Fraction(d, code.n),
        rate=ExactRate(code.q, code.size, code.n),
    )


def compare_rates(first: Code, second: Code) -> int:
    """
    Сравнивает скорости двух кодов без вещественной арифметики.

    Returns:
        -1, 0 или 1
    """
    a = ExactRate(first.q, first.size, first.n)
    b = ExactRate(second.q, second.size, second.n)
    if a == b:
        return 0
    return -1 if a < b else 1


def satisfies_singleton(code: Code) -> bool:
    """Проверка границы Синглтона #C <= q^(n-d+1) в целых числах."""
    d = min_distance(code)
    return code.size <= code.q ** (code.n - d + 1)


def permute_digits(code: Code, permutation: Sequence[int]) -> Code:
    """
    Применяет перестановку алфавита ко всем цифрам кода.

    Args:
        code: Код
        permutation: permutation[a] - новая цифра для a

    Returns:
        Код с теми же параметрами
    """
    if sorted(permutation) != list(range(code.q)):
        raise InputError(f"{list(permutation)} не является перестановкой {{0..{code.q - 1}}}")
    return Code.from_words(code.q, (tuple(permutation[x] for x in word) for word in code.words))
