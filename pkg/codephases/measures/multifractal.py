"""Мультифрактальные меры, индуцированные семействами кодов."""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from codephases.codes import Code, Word
from codephases.internal.constants import POWER_ITERATION_MAX_ITER, TOLERANCE
from codephases.internal.errors import ConvergenceError, InputError, PreconditionError
from codephases.measures.cylinder import CylinderAssignment, CylinderWord, cylinder_words
from codephases.measures.potential import (
    Potential,
    PotentialKind,
    SeedWord,
    measure_from_potential,
)
from codephases.thermo.family import CodeFamily, family_weights, lambda_series

logger = logging.getLogger(__name__)


def _member_code(family: CodeFamily, r: int) -> Code:
    if not 1 <= r <= len(family):
        raise PreconditionError(f"r={r} вне [1, {len(family)}]")
    code = family.members[r - 1].code
    if code is None:
        raise PreconditionError(f"Код C_{r} задан только параметрами")
    return code


def _union_lambdas(family: CodeFamily) -> Dict[Word, float]:
    """lambda_a = n_r ln q по наименьшему r, содержащему a."""
    lambdas: Dict[Word, float] = {}
    for r in range(1, len(family) + 1):
        code = _member_code(family, r)
        for word in code.words:
            lambdas.setdefault(word, code.n * math.log(family.q))
    return lambdas


def induced_multifractal_uniform(
    family: CodeFamily,
    r: int,
    beta: float,
    depth: int,
    lambdas: Optional[Mapping[Word, float]] = None,
) -> CylinderAssignment:
    """
    Нормированная мера mu(w) = prod_j e^(-beta lambda_{w_j}) / Z_r(beta)^m на цилиндрах C_r.

    Args:
        family: Семейство с материализованными кодами
        r: Номер кода (с единицы)
        beta: Обратная температура
        depth: Глубина назначения
        lambdas: Веса на объединении кодов; по умолчанию n_r ln q

    Returns:
        Вероятностная мера на цилиндрах C_r
    """
    code = _member_code(family, r)
    if lambdas is None:
        lambdas = _union_lambdas(family)
    missing = [word for word in code.words if word not in lambdas]
    if missing:
        raise InputError(f"Нет весов для слов {missing[:3]}")
    exponents = {word: math.exp(-beta * lambdas[word]) for word in code.words}
    z_r = math.fsum(exponents.values())
    pot = Potential.from_weights({word: value / z_r for word, value in exponents.items()})
    return measure_from_potential(pot, SeedWord.constant(code.words[0]), depth)


@dataclass(frozen=True)
class PerronFrobenius:
    """Левый собственный вектор f матрицы W(ab) и спектральный радиус rho."""

    letters: Tuple[Word, ...]
    vector: np.ndarray
    rho: float
    iterations: int
    residual: float


def perron_frobenius(pot: Potential, max_iter: int = POWER_ITERATION_MAX_ITER) -> PerronFrobenius:
    """
    Степенной метод для sum_a W(ab) f_a = rho f_b.

    Итерация f <- W^T f с нормировкой по максимуму стартует с равномерного вектора.

    Raises:
        PreconditionError: Если потенциал не глубины 2
        ConvergenceError: Если невязка не опустилась ниже допуска
    """
    if pot.kind is not PotentialKind.DEPTH2:
        raise PreconditionError("Нужен потенциал глубины 2")
    letters = pot.letters
    matrix = np.array([[float(pot.weight(a, b)) for b in letters] for a in letters])
    transposed = matrix.T
    vector = np.ones(len(letters))
    residual = math.inf
    for iteration in range(1, max_iter + 1):
        image = transposed @ vector
        rho = float(image.max())
        vector = image / rho
        residual = float(np.abs(transposed @ vector - rho * vector).max())
        if residual < TOLERANCE:
            if not np.all(vector > 0.0):
                raise ConvergenceError("Собственный вектор не строго положителен")
            logger.debug(f"Степенной метод сошелся за {iteration} итераций, rho={rho!r}")
            return PerronFrobenius(letters, vector, rho, iteration, residual)
    raise ConvergenceError(
        f"Степенной метод не сошелся за {max_iter} итераций (невязка {residual:e})"
    )


def induced_multifractal_pf(
    pot: Potential, x0: Word, depth: int
) -> Tuple[PerronFrobenius, CylinderAssignment]:
    """
    Мера mu(w) = W(w_m w_{m-1}) ... W(w_1 x0) f_{w_m} / (rho^m f_{x0}).

    Args:
        pot: Положительный потенциал глубины 2 на буквах C_r
        x0: Начальная буква
        depth: Глубина назначения

    Returns:
        Данные степенного метода и вероятностная мера
    """
    x0 = tuple(x0)
    if x0 not in pot.letters:
        raise InputError(f"Начальная буква {x0} не принадлежит потенциалу")
    pf = perron_frobenius(pot)
    index = {letter: i for i, letter in enumerate(pf.letters)}
    products: Dict[CylinderWord, float] = {(): 1.0}
    values: Dict[CylinderWord, float] = {(): 1.0}
    for length in range(1, depth + 1):
        for word in cylinder_words(pf.letters, length):
            context = word[-2] if length > 1 else x0
            products[word] = products[word[:-1]] * float(pot.weight(word[-1], context))
            ratio = pf.vector[index[word[-1]]] / pf.vector[index[x0]]
            values[word] = products[word] * ratio / pf.rho**length
    return pf, CylinderAssignment(pf.letters, depth, values)


def family_potential(family: CodeFamily, beta: float) -> Potential:
    """
    Потенциал глубины 1 на объединении кодов: W(a) = e^(-beta lambda_a) / Lambda(beta).

    Условие Кина выполнено по построению.
    """
    lambdas = _union_lambdas(family)
    level = lambda_series(family_weights(family), beta)
    return Potential.from_weights(
        {word: math.exp(-beta * value) / level for word, value in lambdas.items()}
    )
