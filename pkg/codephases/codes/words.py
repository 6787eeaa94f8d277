"""Слова над цифровым алфавитом и расстояние Хэмминга."""

from typing import Sequence, Tuple

from codephases.internal.constants import DIGIT_SYMBOLS
from codephases.internal.errors import InputError

Word = Tuple[int, ...]


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """
    Считает число позиций, в которых слова различаются.

    Args:
        a: Первое слово
        b: Второе слово

    Returns:
        Расстояние Хэмминга

    Raises:
        InputError: Если длины слов различаются
    """
    if len(a) != len(b):
        raise InputError(f"Слова разной длины: {len(a)} и {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def hamming_weight(word: Sequence[int]) -> int:
    """Число ненулевых цифр слова."""
    return sum(1 for x in word if x != 0)


def word_to_string(word: Sequence[int]) -> str:
    """Записывает слово строкой цифр основания q."""
    return "".join(DIGIT_SYMBOLS[digit] for digit in word)


def word_from_string(text: str, q: int) -> Word:
    """
    Разбирает строку цифр основания q.

    Args:
        text: Строка вида "0110"
        q: Размер алфавита

    Returns:
        Слово как кортеж цифр

    Raises:
        InputError: Если встречен символ вне алфавита
    """
    digits = []
    for symbol in text.strip().lower():
        index = DIGIT_SYMBOLS.find(symbol)
        if index < 0 or index >= q:
            raise InputError(f"Символ {symbol!r} не является цифрой основания {q}")
        digits.append(index)
    return tuple(digits)
