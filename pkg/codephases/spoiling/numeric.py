"""Численная порча кода."""

from typing import Union

import codephases.internal.strategies.spoiling as spoil_strategies
from codephases.codes import Code
from codephases.spoiling.operations import SpoilKind, SpoilOutcome


def numeric_spoil(code: Code, kind: Union[SpoilKind, str]) -> SpoilOutcome:
    """
    Портит параметры кода по одному из трех правил.

    - I: [n+1, k, d]
    - II: [n-1, k, d-1] (или [n-1, k, d] при d = 1)
    - III: [n-1, k', d] с q^([k]-1) <= #C' < #C

    Args:
        code: Исходный код
        kind: Вид порчи

    Returns:
        Новый код, сработавшая ветка и журнал операций

    Raises:
        PreconditionError: Если предусловия вида нарушены
    """
    return spoil_strategies.get_spoil_strategy(SpoilKind(kind)).spoil(code)
