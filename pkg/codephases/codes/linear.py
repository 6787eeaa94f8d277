"""Линейные коды над простым полем и коды Рида-Соломона."""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from codephases.codes.code import Code
from codephases.codes.words import hamming_weight
from codephases.internal.errors import InputError, PreconditionError

logger = logging.getLogger(__name__)


def is_prime(value: int) -> bool:
    """Проверка простоты перебором делителей."""
    if value < 2:
        return False
    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 1
    return True


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """
    Ранг матрицы над F_p приведением к ступенчатому виду.

    Args:
        rows: Строки матрицы
        p: Простой модуль

    Returns:
        Ранг
    """
    matrix: List[List[int]] = [[x % p for x in row] for row in rows]
    rank = 0
    n_cols = len(matrix[0]) if matrix else 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inverse = pow(matrix[rank][col], -1, p)
        matrix[rank] = [(x * inverse) % p for x in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [(x - factor * y) % p for x, y in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class GeneratorMatrix:
    """Порождающая матрица линейного кода над F_q, q простое."""

    q: int
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not is_prime(self.q):
            raise InputError(f"q={self.q} не простое: линейные коды строятся только над F_p")
        if not self.rows or not self.rows[0]:
            raise InputError("Порождающая матрица пуста")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise InputError("Строки порождающей матрицы разной длины")
        if any(x < 0 or x >= self.q for row in self.rows for x in row):
            raise InputError(f"Элементы матрицы должны лежать в [0, {self.q})")
        if rank_mod_p(self.rows, self.q) != len(self.rows):
            raise PreconditionError("Строки порождающей матрицы линейно зависимы")

    @classmethod
    def from_rows(cls, q: int, rows: Sequence[Sequence[int]]) -> "GeneratorMatrix":
        return cls(q=q, rows=tuple(tuple(int(x) % q for x in row) for row in rows))

    @property
    def k_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])


def make_linear_code(g: GeneratorMatrix) -> Code:
    """
    Перечисляет все q^k кодовых слов как линейную оболочку строк.

    Args:
        g: Порождающая матрица

    Returns:
        Линейный код с #C = q^k
    """
    messages = np.array(list(itertools.product(range(g.q), repeat=g.k_rows)), dtype=np.int64)
    words = (messages @ np.array(g.rows, dtype=np.int64)) % g.q
    code = Code.from_words(g.q, (tuple(row) for row in words.tolist()), n=g.n_cols)
    logger.debug(f"Линейный код [{g.n_cols}, {g.k_rows}]_{g.q}: {code.size} слов")
    return code


def make_reed_solomon(q: int, k: int) -> Code:
    """
    Код Рида-Соломона: значения многочленов степени < k во всех точках F_q.

    Args:
        q: Простое число
        k: Размерность, 1 <= k <= q

    Returns:
        Код с параметрами [q, k, q-k+1]_q
    """
    if not is_prime(q):
        raise InputError(f"q={q} не простое")
    if not 1 <= k <= q:
        raise PreconditionError(f"k={k} вне диапазона [1, {q}]")
    rows = [[pow(x, j, q) for x in range(q)] for j in range(k)]
    return make_linear_code(GeneratorMatrix.from_rows(q, rows))


def is_linear(code: Code) -> bool:
    """Замкнутость кода относительно вычитания по простому модулю q."""
    if not is_prime(code.q):
        return False
    words = code.word_set
    q = code.q
    for a in code.words:
        for b in code.words:
            if tuple((x - y) % q for x, y in zip(a, b)) not in words:
                return False
    return True


def min_weight(code: Code) -> int:
    """Минимальный вес ненулевого слова."""
    weights = [hamming_weight(word) for word in code.words if any(word)]
    if not weights:
        raise PreconditionError("В коде нет ненулевых слов")
    return min(weights)
