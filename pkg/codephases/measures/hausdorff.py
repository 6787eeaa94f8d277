"""Равномерная мера Хаусдорфа на S_C и ее производная Радона-Никодима."""

import math
from fractions import Fraction

from codephases.codes import Code
from codephases.measures.cylinder import CylinderAssignment
from codephases.measures.potential import Potential, SeedWord, measure_from_potential


def radon_nikodym_constant(code: Code) -> Fraction:
    """Производная меры Хаусдорфа при сжатии sigma_a: q^(-k) = 1/#C."""
    return Fraction(1, code.size)


def uniform_potential(code: Code, exact: bool = True) -> Potential:
    """
    Потенциал Кина lambda_a = n ln q при beta = R.

    Точный вариант хранит W(a) = 1/#C как Fraction.
    """
    if exact:
        return Potential.from_weights({word: radon_nikodym_constant(code) for word in code.words})
    return Potential.from_lambdas(
        {word: code.n * math.log(code.q) for word in code.words}, beta=code.params.R
    )


def hausdorff_measure(code: Code, depth: int, exact: bool = True) -> CylinderAssignment:
    """Значения mu(w) = q^(-k |w|) на цилиндрах до глубины depth."""
    return measure_from_potential(
        uniform_potential(code, exact), SeedWord.constant(code.words[0]), depth
    )
