"""Случайные коды для экспериментов."""

import logging
from typing import List, Set

import numpy as np

from codephases.codes.code import Code
from codephases.codes.words import Word
from codephases.internal.errors import PreconditionError

logger = logging.getLogger(__name__)

# Порог, до которого выборка без возвращения идет через перестановку
_DENSE_SAMPLING_LIMIT: int = 1_000_000


def _index_to_word(index: int, q: int, n: int) -> Word:
    digits: List[int] = []
    for _ in range(n):
        index, digit = divmod(index, q)
        digits.append(digit)
    return tuple(reversed(digits))


def random_code(q: int, n: int, size: int, seed: int) -> Code:
    """
    Равномерно выбирает size различных слов из A^n.

    Args:
        q: Размер алфавита
        n: Длина
        size: Число слов
        seed: Зерно генератора

    Returns:
        Код, детерминированный по (q, n, size, seed)

    Raises:
        PreconditionError: Если size вне [1, q^n]
    """
    total = q**n
    if not 1 <= size <= total:
        raise PreconditionError(f"size={size} вне диапазона [1, {total}]")
    rng = np.random.default_rng(seed)
    if total <= _DENSE_SAMPLING_LIMIT:
        indices = [int(i) for i in rng.choice(total, size=size, replace=False)]
    else:
        chosen: Set[int] = set()
        indices = []
        while len(indices) < size:
            candidate = int(rng.integers(0, total))
            if candidate not in chosen:
                chosen.add(candidate)
                indices.append(candidate)
    return Code.from_words(q, (_index_to_word(i, q, n) for i in indices), n=n)
