"""Оператор переноса Рюэля на цилиндрических функциях."""

from typing import Dict, Optional

from codephases.internal.errors import InputError, PreconditionError
from codephases.measures.cylinder import CylinderFunction, CylinderWord, Number, cylinder_words
from codephases.measures.potential import Potential, PotentialKind, SeedWord


def ruelle_apply(
    pot: Potential, f: CylinderFunction, x0: Optional[SeedWord] = None
) -> CylinderFunction:
    """
    (R f)(x) = sum_a W(a x) f(a x) для функции f глубины m.

    Результат зависит от первых m-1 букв x. Для потенциала глубины 2 и m = 1
    следующая буква x_1 берется из x0.

    Args:
        pot: Потенциал
        f: Функция глубины m >= 1 над буквами потенциала
        x0: Начальное слово (нужно только для глубины 2 при m = 1)

    Returns:
        Функция глубины m-1
    """
    if f.depth < 1:
        raise PreconditionError("Оператор Рюэля требует функцию глубины >= 1")
    if f.letters != pot.letters:
        raise InputError("Буквы функции и потенциала различаются")
    if pot.kind is PotentialKind.DEPTH2 and f.depth == 1 and x0 is None:
        raise PreconditionError("Для функции глубины 1 и потенциала глубины 2 нужно x0")

    values: Dict[CylinderWord, Number] = {}
    for word in cylinder_words(f.letters, f.depth - 1):
        context = word[0] if word else (x0.first() if x0 is not None else None)
        values[word] = sum(pot.weight(a, context) * f((a,) + word) for a in pot.letters)
    return CylinderFunction(f.letters, f.depth - 1, values)
