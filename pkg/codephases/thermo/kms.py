"""Значения KMS-состояний и размерности фон Неймана проекторов."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from codephases.codes import Code, Word
from codephases.fractal.subspace import CoordinateSubspace, subspace_count
from codephases.internal.errors import InputError
from codephases.thermo.weights import Weights


def _check_letters(code: Code, word: Sequence[Word]) -> None:
    for letter in word:
        if tuple(letter) not in code:
            raise InputError(f"Буква {letter} не принадлежит коду")


def kms_state_value(
    code: Code,
    beta: float,
    w: Sequence[Word],
    w_prime: Sequence[Word],
    weights: Optional[Weights] = None,
) -> float:
    """
    Значение KMS-состояния на S_w S_w'^*.

    Недиагональные значения равны нулю; на диагонали q^(-beta n m) для слова
    из m кодовых букв, а для общих весов произведение e^(-beta lambda).

    Args:
        code: Код
        beta: Обратная температура
        w: Слово из кодовых слов
        w_prime: Второе слово
        weights: Необязательные веса по буквам

    Returns:
        Значение состояния
    """
    _check_letters(code, w)
    _check_letters(code, w_prime)
    if [tuple(x) for x in w] != [tuple(x) for x in w_prime]:
        return 0.0
    if weights is None:
        return math.exp(-beta * code.n * len(w) * math.log(code.q))
    return math.exp(-beta * math.fsum(weights.weight(tuple(letter)) for letter in w))


def keane_sum(code: Code, beta: float) -> float:
    """Сумма диагональных значений по однобуквенным словам: q^((R-beta)n)."""
    return math.fsum(kms_state_value(code, beta, [a], [a]) for a in code.words)


@dataclass(frozen=True)
class ProjectionState:
    """
    Значение состояния на проекторе P_pi и проверки размерностей.

    dim_check_pi и dim_check_Spi равны None для пустого сечения;
    dim_check_pi также None при ell = 0.
    """

    count: int
    phi_value: Fraction
    vn_dim: Fraction
    dim_check_pi: Optional[float]
    dim_check_Spi: Optional[float]

    @property
    def is_empty(self) -> bool:
        return self.count == 0


def projection_state_and_vn_dim(code: Code, pi: CoordinateSubspace) -> ProjectionState:
    """
    Размерность фон Неймана q^(-k) #(C ∩ pi) и восстановление размерностей сечений.

    Args:
        code: Код
        pi: Координатное подпространство

    Returns:
        Значение состояния, размерность и проверки (k + log_q Dim)/ell, (k + log_q Dim)/n
    """
    count = subspace_count(code, pi)
    vn_dim = Fraction(count, code.size)
    if count == 0:
        return ProjectionState(count, vn_dim, vn_dim, None, None)
    numerator = code.params.k_real + math.log(vn_dim) / math.log(code.q)
    return ProjectionState(
        count=count,
        phi_value=vn_dim,
        vn_dim=vn_dim,
        dim_check_pi=numerator / pi.ell if pi.ell > 0 else None,
        dim_check_Spi=numerator / code.n,
    )
