"""Поиск кодов с кратными параметрами [an, ak, ad]_q."""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from codephases.codes import Code
from codephases.codes.code import floor_log
from codephases.internal.errors import PreconditionError
from codephases.internal.strategies.spoiling import (
    ConstantInsertStrategy,
    CoordinateDeleteStrategy,
)

logger = logging.getLogger(__name__)

# Бюджет по умолчанию: число слов во всех рассмотренных кандидатах
DEFAULT_PROBE_BUDGET: int = 200_000


@dataclass(frozen=True)
class ProbeResult:
    """Найденные кратности со свидетелями и ненайденные кратности."""

    found: Tuple[int, ...]
    not_found: Tuple[int, ...]
    witnesses: Dict[int, Code] = field(default_factory=dict, compare=False)


def repetition(code: Code, times: int) -> Code:
    """Каждое слово повторяется times раз подряд: [tn, k, td]."""
    return Code.from_words(code.q, (word * times for word in code.words), n=code.n * times)


def direct_power(code: Code, times: int) -> Code:
    """Все конкатенации times кодовых слов: [tn, tk, d]."""
    words = (sum(parts, ()) for parts in itertools.product(code.words, repeat=times))
    return Code.from_words(code.q, words, n=code.n * times)


def _dominates(code: Code, n: int, k: int, d: int) -> bool:
    return (
        code.size >= 2
        and code.n <= n
        and floor_log(code.size, code.q) >= k
        and code.distance is not None
        and code.distance >= d
    )


def _tighten(code: Code, n: int, k: int, d: int) -> Code:
    # подмножество нужной мощности, добивка длины видом I, спуск d парами II+I
    size = max(code.q**k, 2)
    current = Code.from_words(code.q, code.words[:size], n=code.n)
    insert = ConstantInsertStrategy()
    delete = CoordinateDeleteStrategy()
    while current.n < n:
        current = insert.spoil(current).code
    while current.distance is not None and current.distance > d:
        current = insert.spoil(delete.spoil(current).code).code
    return current


def multiplicity_probe(
    code: Code,
    a_max: int,
    budget: int = DEFAULT_PROBE_BUDGET,
    better_codes: Sequence[Code] = (),
) -> ProbeResult:
    """
    Ищет для a = 1..a_max код с параметрами [a*n, a*[k], a*d]_q.

    Кандидаты: сам код, переданные лучшие коды, повторение кода a раз и
    прямая степень C^a. Доминирующий кандидат доводится до точных параметров
    порчей; каждый свидетель проверяется пересчетом параметров. Отсутствие
    кратности означает "не найдено", а не "не существует".

    Args:
        code: Код с #C >= 2
        a_max: Наибольшая проверяемая кратность
        budget: Предел суммарного числа слов у рассмотренных кандидатов
        better_codes: Коды, которые можно портить вниз

    Returns:
        Результат поиска со свидетелями
    """
    if code.size < 2:
        raise PreconditionError("Поиск кратностей требует #C >= 2")
    if a_max < 1:
        raise PreconditionError(f"a_max={a_max} < 1")
    k = floor_log(code.size, code.q)
    d = code.distance or 0
    found: List[int] = []
    witnesses: Dict[int, Code] = {}
    spent = 0

    for a in range(1, a_max + 1):
        target = (a * code.n, a * k, a * d)
        candidates: List[Code] = [code, *better_codes, repetition(code, a)]
        if code.size**a + spent <= budget:
            candidates.append(direct_power(code, a))
        for candidate in candidates:
            if candidate.q != code.q:
                continue
            spent += candidate.size
            if spent > budget:
                logger.warning(f"⚠️ Бюджет {budget} слов исчерпан на кратности a={a}")
                break
            if not _dominates(candidate, *target):
                continue
            witness = _tighten(candidate, *target)
            params = (witness.n, floor_log(witness.size, witness.q), witness.distance)
            if params == target:
                found.append(a)
                witnesses[a] = witness
                break
            logger.debug(f"Кандидат для a={a} дал параметры {params} вместо {target}")
        if spent > budget:
            break

    not_found = tuple(a for a in range(1, a_max + 1) if a not in witnesses)
    return ProbeResult(found=tuple(found), not_found=not_found, witnesses=witnesses)


