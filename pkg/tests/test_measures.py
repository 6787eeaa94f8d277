"""Тесты для мер, полумер и потенциалов на цилиндрах."""

import math
from fractions import Fraction

import numpy as np
import pytest

from codephases.codes import Code
from codephases.internal.errors import InputError, PreconditionError
from codephases.measures import (
    CylinderAssignment,
    CylinderFunction,
    MeasureClass,
    MonotoneMap,
    Potential,
    PotentialKind,
    SeedWord,
    check_semimeasure,
    critical_beta_semimeasure,
    cylinder_words,
    family_potential,
    hausdorff_measure,
    induced_multifractal_pf,
    induced_multifractal_uniform,
    measure_from_potential,
    mixture_semimeasure,
    perron_frobenius,
    potential_semimeasure,
    pushforward_semimeasure,
    radon_nikodym_constant,
    renormalize_semimeasure,
    ruelle_apply,
    semimeasure_kms_value,
    semimeasure_partition,
    uniform_potential,
)
from codephases.thermo import CodeFamily

A, B = (0,), (1,)

# Потенциал глубины 2 с условием Кина: ключ (a, b) - значение W(a b ...)
MARKOV = {
    (A, A): Fraction(3, 4),
    (B, A): Fraction(1, 4),
    (A, B): Fraction(1, 3),
    (B, B): Fraction(2, 3),
}


def letters_of(count: int):
    return tuple((i,) for i in range(count))


def random_keane_potential(rng: np.random.Generator, count: int, depth2: bool) -> Potential:
    letters = letters_of(count)
    if not depth2:
        values = rng.uniform(0.1, 1.0, size=count)
        values /= values.sum()
        return Potential.from_weights(dict(zip(letters, values.tolist())))
    table = {}
    for b in letters:
        column = rng.uniform(0.1, 1.0, size=count)
        column /= column.sum()
        table.update({(a, b): float(w) for a, w in zip(letters, column)})
    return Potential.from_weights(table)


def test_cylinder_function():
    """Тест цилиндрических функций."""
    f = CylinderFunction.indicator([A, B], [B])
    assert f([B, A, A]) == 1
    assert f([A]) == 0
    assert CylinderFunction.constant([A, B], 2, 5).is_constant()
    with pytest.raises(InputError):
        CylinderFunction([A, B], 1, {(A,): 1})
    with pytest.raises(InputError):
        CylinderFunction([A, A], 0, {(): 1})


def test_cylinder_assignment_validation():
    """Тест проверок назначения на цилиндрах."""
    with pytest.raises(InputError):
        CylinderAssignment((A, B), 1, {(A,): 1})
    with pytest.raises(InputError):
        CylinderAssignment((A, B), 1, {(): 1, (A,): -1})
    with pytest.raises(InputError):
        CylinderAssignment((A, B), 1, {(): 1, (A, A): 1})
    mu = CylinderAssignment((A, B), 1, {(): 1, (A,): Fraction(1, 2)})
    assert mu.value([B]) == 0
    assert mu.layer_mass(1) == Fraction(1, 2)
    with pytest.raises(PreconditionError):
        mu.value([A, A])


def test_check_semimeasure_classes():
    """Тест классификации: мера, полумера и ни то ни другое."""
    half = Fraction(1, 2)
    measure = CylinderAssignment((A, B), 1, {(): 1, (A,): half, (B,): half})
    semi = CylinderAssignment((A, B), 1, {(): 1, (A,): half})
    neither = CylinderAssignment((A, B), 1, {(): 1, (A,): 1, (B,): 1})
    heavy = CylinderAssignment((A, B), 0, {(): 2})
    assert check_semimeasure(measure) is MeasureClass.MEASURE
    assert check_semimeasure(semi) is MeasureClass.SEMIMEASURE
    assert check_semimeasure(neither) is MeasureClass.NEITHER
    assert check_semimeasure(heavy) is MeasureClass.NEITHER


def test_potential_validation():
    """Тест проверок потенциала."""
    with pytest.raises(InputError):
        Potential((A, B), PotentialKind.DEPTH1, {A: 0.5})
    with pytest.raises(PreconditionError):
        Potential((A, B), PotentialKind.DEPTH1, {A: 0.5, B: 0.0})
    with pytest.raises(InputError):
        Potential.from_lambdas({A: -1.0, B: 1.0}, beta=1.0)
    pot = Potential.from_weights(MARKOV)
    assert pot.kind is PotentialKind.DEPTH2
    assert pot.is_exact and pot.is_keane()
    assert pot.keane_sums() == {A: 1, B: 1}
    with pytest.raises(PreconditionError):
        pot.weight(A)


def test_potential_from_lambdas():
    """Тест потенциала W = exp(-beta lambda)."""
    pot = Potential.from_lambdas({A: math.log(2), B: math.log(2)}, beta=1.0)
    assert pot.kind is PotentialKind.DEPTH1
    assert pot.is_keane()
    assert pot.lambdas()[A] == pytest.approx(math.log(2))


def test_depth_two_product_formula():
    """Тест формулы произведения для потенциала глубины 2."""
    mu = measure_from_potential(Potential.from_weights(MARKOV), SeedWord.constant(A), 2)
    assert mu.value([A]) == Fraction(3, 4)
    assert mu.value([B]) == Fraction(1, 4)
    assert mu.value([B, A]) == Fraction(1, 12)
    assert mu.value([B, B]) == Fraction(1, 6)
    assert check_semimeasure(mu) is MeasureClass.MEASURE


def test_seed_word():
    """Тест финально периодического начального слова."""
    x0 = SeedWord(prefix=(B,), period=(A, B))
    assert [x0.letter(i) for i in range(5)] == [B, A, B, A, B]
    assert x0.first() == B
    with pytest.raises(InputError):
        SeedWord()


def test_random_keane_layer_masses():
    """Тест масс слоев для случайных потенциалов Кина глубины 1 и 2."""
    rng = np.random.default_rng(17)
    for index in range(20):
        pot = random_keane_potential(rng, int(rng.integers(2, 5)), depth2=index % 2 == 1)
        mu = measure_from_potential(pot, SeedWord.constant(pot.letters[0]), 5)
        for length in range(6):
            assert mu.layer_mass(length) == pytest.approx(1.0, abs=1e-12)
        assert check_semimeasure(mu) is MeasureClass.MEASURE


def test_measure_preconditions():
    """Тест отказа для потенциала без условия Кина и слишком большой глубины."""
    sub = Potential.from_weights({A: Fraction(1, 4), B: Fraction(1, 4)})
    with pytest.raises(PreconditionError):
        measure_from_potential(sub, SeedWord.constant(A), 2)
    semi = potential_semimeasure(sub, SeedWord.constant(A), 2)
    assert check_semimeasure(semi) is MeasureClass.SEMIMEASURE
    heavy = Potential.from_weights({A: 1, B: 1})
    with pytest.raises(PreconditionError):
        potential_semimeasure(heavy, SeedWord.constant(A), 1)
    with pytest.raises(PreconditionError):
        measure_from_potential(Potential.from_weights(MARKOV), SeedWord.constant(A), 9)


def test_depth_one_ratio_equals_weight():
    """Тест: mu(a w) / mu(w) = W(a) для точного потенциала Кина глубины 1."""
    rng = np.random.default_rng(41)
    for count in (2, 3, 4):
        raw = [int(x) for x in rng.integers(1, 10, size=count)]
        letters = letters_of(count)
        weights = {a: Fraction(value, sum(raw)) for a, value in zip(letters, raw)}
        pot = Potential.from_weights(weights)
        mu = measure_from_potential(pot, SeedWord.constant(letters[0]), 3)
        for length in range(3):
            for word in cylinder_words(letters, length):
                for a in letters:
                    assert mu.value((a,) + word) == weights[a] * mu.value(word)


def test_renormalized_semimeasure_is_measure():
    """Тест: перенормировка полумеры потенциала при beta_c дает меру."""
    rng = np.random.default_rng(43)
    for count in (2, 3, 5):
        raw = [int(x) for x in rng.integers(1, 10, size=count)]
        letters = letters_of(count)
        scale = sum(raw) + int(rng.integers(1, 10))
        sub = Potential.from_weights(
            {a: Fraction(value, scale) for a, value in zip(letters, raw)}
        )
        x0 = SeedWord.constant(letters[0])
        semi = potential_semimeasure(sub, x0, 3)
        assert check_semimeasure(semi) is MeasureClass.SEMIMEASURE

        masses = {word[0]: value for word, value in semi.layer(1).items()}
        beta_c, pot = renormalize_semimeasure(masses)
        assert 0 < beta_c < 1
        assert math.fsum(float(m) ** beta_c for m in masses.values()) == pytest.approx(
            1.0, abs=1e-12
        )
        mu = measure_from_potential(pot, x0, 3)
        assert check_semimeasure(mu) is MeasureClass.MEASURE
        assert mu.layer_mass(3) == pytest.approx(1.0, abs=1e-12)


def test_hausdorff_measure(repetition_code, hamming_code):
    """Тест равномерной меры Хаусдорфа q^(-k|w|)."""
    assert radon_nikodym_constant(repetition_code) == Fraction(1, 2)
    mu = hausdorff_measure(repetition_code, 3)
    for word in cylinder_words(mu.letters, 3):
        assert mu.value(word) == Fraction(1, 8)
    assert check_semimeasure(mu) is MeasureClass.MEASURE
    approx = hausdorff_measure(hamming_code, 2, exact=False)
    assert approx.layer_mass(2) == pytest.approx(1.0, abs=1e-12)
    assert uniform_potential(hamming_code, exact=False).is_keane()


def test_ruelle_keane_fixes_constants():
    """Тест оператора Рюэля: потенциал Кина сохраняет константы."""
    pot = Potential.from_weights(MARKOV)
    image = ruelle_apply(pot, CylinderFunction.constant((A, B), 2))
    assert image.depth == 1
    assert image.values == {(A,): 1, (B,): 1}
    top = ruelle_apply(pot, CylinderFunction.constant((A, B), 1), x0=SeedWord.constant(B))
    assert top.values == {(): 1}
    with pytest.raises(PreconditionError):
        ruelle_apply(pot, CylinderFunction.constant((A, B), 1))


def test_ruelle_indicator():
    """Тест оператора Рюэля на индикаторе цилиндра."""
    pot = Potential.from_weights({A: Fraction(1, 3), B: Fraction(2, 3)})
    image = ruelle_apply(pot, CylinderFunction.indicator((A, B), [B, A]))
    assert image.values == {(A,): Fraction(2, 3), (B,): 0}
    with pytest.raises(PreconditionError):
        ruelle_apply(pot, CylinderFunction.constant((A, B), 0))


def test_encoder_pushforward_is_uniform(repetition_code):
    """Тест кодировщика: образ равномерной меры - мера Хаусдорфа."""
    f = MonotoneMap.encoder(repetition_code)
    assert f.apply([0, 1]) == ((0, 0, 0), (1, 1, 1))
    mu = pushforward_semimeasure(f, 2)
    assert mu.value([(1, 1, 1)]) == Fraction(1, 2)
    assert check_semimeasure(mu) is MeasureClass.MEASURE
    with pytest.raises(PreconditionError):
        MonotoneMap.encoder(Code.from_words(2, [(0, 0), (0, 1), (1, 1)]))


def test_decoder_pushforward_hamming(hamming_code):
    """Тест декодера совершенного кода: mu(u) = 2^(-4|u|)."""
    f = MonotoneMap.decoder(hamming_code)
    assert set(f.preimage_counts().values()) == {8}
    mu = pushforward_semimeasure(f, 2)
    for length in range(3):
        for word in cylinder_words(mu.letters, length):
            assert mu.value(word) == Fraction(1, 16) ** length


def test_decoder_ties_and_multiplicativity():
    """Тест выбора наименьшего слова при равенстве расстояний и мультипликативности."""
    code = Code.from_words(2, [(0, 0), (0, 1), (1, 1)])
    f = MonotoneMap.decoder(code)
    assert f.table[(1, 0)] == (0, 0)
    assert f.preimage_counts() == {(0, 0): 2, (0, 1): 1, (1, 1): 1}
    mu = pushforward_semimeasure(f, 3)
    for total in range(4):
        for word in cylinder_words(mu.letters, total):
            for cut in range(total + 1):
                assert mu.value(word) == mu.value(word[:cut]) * mu.value(word[cut:])
    with pytest.raises(InputError):
        f.apply([0, 1, 1])


def test_mixture_semimeasure(repetition_code):
    """Тест смеси с суммой коэффициентов меньше 1."""
    uniform = hausdorff_measure(repetition_code, 2)
    decoded = pushforward_semimeasure(MonotoneMap.decoder(repetition_code), 2)
    half = Fraction(1, 4)
    mixture = mixture_semimeasure([uniform, decoded], [half, half])
    assert check_semimeasure(mixture) is MeasureClass.SEMIMEASURE
    assert mixture.value(()) == Fraction(1, 2)
    with pytest.raises(PreconditionError):
        mixture_semimeasure([uniform, decoded], [Fraction(3, 4), Fraction(1, 2)])
    with pytest.raises(PreconditionError):
        mixture_semimeasure([uniform], [half, half])


def test_semimeasure_critical_temperature():
    """Тест критической температуры полумеры и перенормировки."""
    masses = {A: Fraction(1, 4), B: Fraction(1, 4)}
    assert critical_beta_semimeasure(masses) == pytest.approx(0.5, abs=1e-12)
    assert critical_beta_semimeasure({A: 0.5, B: 0.5}) == 1.0
    beta_c, pot = renormalize_semimeasure(masses)
    assert beta_c == pytest.approx(0.5, abs=1e-12)
    assert pot.is_keane()
    assert semimeasure_partition(masses, 1.0).value == pytest.approx(2.0)
    assert semimeasure_partition(masses, 0.5).is_divergent
    with pytest.raises(PreconditionError):
        critical_beta_semimeasure({A: 0.75, B: 0.5})


def test_semimeasure_kms_value(repetition_code):
    """Тест значения состояния mu(w)^beta."""
    mu = hausdorff_measure(repetition_code, 2)
    word = [(0, 0, 0), (1, 1, 1)]
    assert semimeasure_kms_value(mu, word, 0.5) == pytest.approx(0.5)


def test_perron_frobenius_symmetric_example():
    """Тест точного решения для матрицы [[1/2, 1/4], [1/4, 1/2]]."""
    pot = Potential.from_weights({(A, A): 0.5, (B, A): 0.25, (A, B): 0.25, (B, B): 0.5})
    pf, mu = induced_multifractal_pf(pot, A, 2)
    assert pf.rho == pytest.approx(0.75, abs=1e-12)
    assert pf.vector.tolist() == pytest.approx([1.0, 1.0])
    assert mu.value([A]) == pytest.approx(2 / 3)
    assert mu.value([B]) == pytest.approx(1 / 3)


def test_perron_frobenius_random_matrices():
    """Тест степенного метода на случайных положительных матрицах размера 2..16."""
    rng = np.random.default_rng(23)
    depth = 4
    for _ in range(20):
        count = int(rng.integers(2, 17))
        letters = letters_of(count)
        matrix = rng.uniform(0.1, 1.0, size=(count, count))
        table = {(a, b): float(matrix[i, j]) for i, a in enumerate(letters)
                 for j, b in enumerate(letters)}
        pot = Potential.from_weights(table)
        pf = perron_frobenius(pot)
        assert pf.residual < 1e-12
        assert np.all(pf.vector > 0)
        _, mu = induced_multifractal_pf(pot, letters[0], depth)
        for length in range(depth + 1):
            assert mu.layer_mass(length) == pytest.approx(1.0, abs=1e-10)
        assert check_semimeasure(mu, tolerance=1e-10) is MeasureClass.MEASURE


def test_perron_frobenius_requires_depth_two():
    """Тест отказа для потенциала глубины 1."""
    with pytest.raises(PreconditionError):
        perron_frobenius(Potential.from_weights({A: 0.5, B: 0.5}))
    with pytest.raises(InputError):
        induced_multifractal_pf(Potential.from_weights(MARKOV), (2,), 1)


def test_family_measures():
    """Тест мер, индуцированных семейством кодов."""
    first = Code.from_words(2, [(0,), (1,)])
    second = Code.from_words(2, [(0, 0), (1, 1)])
    family = CodeFamily.from_codes([first, second])
    pot = family_potential(family, 2.0)
    assert pot.is_keane()
    assert len(pot.letters) == 4
    mu = induced_multifractal_uniform(family, 2, beta=1.0, depth=3)
    assert mu.value([(0, 0), (1, 1)]) == pytest.approx(0.25)
    assert mu.layer_mass(3) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(PreconditionError):
        induced_multifractal_uniform(family, 3, beta=1.0, depth=1)
    parameters = CodeFamily.from_parameters(2, [(1, 2, 1)])
    with pytest.raises(PreconditionError):
        induced_multifractal_uniform(parameters, 1, beta=1.0, depth=1)
