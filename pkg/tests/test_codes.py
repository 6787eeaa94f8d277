"""Тесты для кодов и их параметров."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codephases.codes import (
    Code,
    ExactRate,
    GeneratorMatrix,
    compare_rates,
    dumps_code,
    hamming_distance,
    is_linear,
    load_code,
    loads_code,
    make_reed_solomon,
    min_distance,
    min_distance_pairs,
    min_weight,
    permute_digits,
    random_code,
    satisfies_singleton,
    word_from_string,
    word_to_string,
)
from codephases.internal.errors import InputError, PreconditionError
from tests.conftest import seeded_codes


def test_hamming_params(hamming_code):
    """Тест параметров кода Хэмминга [7, 4, 3]_2."""
    params = hamming_code.params
    assert (params.n, params.size, params.d) == (7, 16, 3)
    assert params.k_real == 4.0
    assert params.k_floor == 4
    assert params.R_floor == Fraction(4, 7)
    assert params.delta == Fraction(3, 7)
    assert params.rate.as_fraction() == Fraction(4, 7)


def test_repetition_params(repetition_code):
    """Тест параметров кода {000, 111}."""
    params = repetition_code.params
    assert (params.n, params.size, params.d) == (3, 2, 3)
    assert params.R_floor == Fraction(1, 3)
    assert params.delta == Fraction(1)


def test_non_power_size_has_real_k():
    """Тест вещественного k при #C, не являющемся степенью q."""
    code = Code.from_words(2, [(0, 0), (0, 1), (1, 1)])
    assert code.params.k_floor == 1
    assert code.params.k_real == pytest.approx(math.log2(3))
    assert code.params.rate.as_fraction() is None


def test_single_word_has_no_distance():
    """Тест кода из одного слова: d не определено."""
    code = Code.from_words(3, [(0, 1, 2)])
    assert code.distance is None
    assert code.params.delta is None
    with pytest.raises(PreconditionError):
        min_distance(code)


def test_from_words_removes_duplicates():
    """Тест удаления повторяющихся слов."""
    code = Code.from_words(2, [(1, 0), (0, 1), (1, 0)])
    assert code.words == ((0, 1), (1, 0))


@pytest.mark.parametrize(
    "q, n, words",
    [
        (1, 2, ((0, 0),)),
        (2, 0, ((),)),
        (2, 2, ()),
        (2, 2, ((0, 0, 0),)),
        (2, 2, ((0, 2),)),
        (2, 2, ((0, 1), (0, 1))),
    ],
)
def test_invalid_code_rejected(q, n, words):
    """Тест отказа для некорректных кодов."""
    with pytest.raises(InputError):
        Code(q=q, n=n, words=words)


def test_min_distance_pairs(repetition_code, hamming_code):
    """Тест пар на минимальном расстоянии."""
    assert min_distance_pairs(repetition_code) == [((0, 0, 0), (1, 1, 1))]
    pairs = min_distance_pairs(hamming_code)
    assert all(hamming_distance(a, b) == 3 for a, b in pairs)
    # 7 слов веса 3 на каждое из 16 слов, каждая пара посчитана один раз
    assert len(pairs) == 16 * 7 // 2


def test_hamming_distance_length_mismatch():
    """Тест расстояния для слов разной длины."""
    with pytest.raises(InputError):
        hamming_distance((0, 1), (0, 1, 1))


def test_exact_rate_comparison():
    """Тест точного сравнения скоростей через степени."""
    assert ExactRate(2, 2, 3) == ExactRate(2, 4, 6)
    assert ExactRate(2, 3, 2) < ExactRate(2, 2, 1)
    assert ExactRate(2, 3, 2) > ExactRate(2, 2, 2)
    with pytest.raises(PreconditionError):
        _ = ExactRate(2, 2, 3) < ExactRate(3, 3, 3)


def test_compare_rates(hamming_code, repetition_code):
    """Тест сравнения скоростей кодов."""
    assert compare_rates(hamming_code, repetition_code) == 1
    assert compare_rates(repetition_code, hamming_code) == -1
    assert compare_rates(hamming_code, hamming_code) == 0


def test_hamming_is_linear(hamming_code):
    """Тест линейности кода Хэмминга."""
    assert is_linear(hamming_code)
    assert min_weight(hamming_code) == 3
    assert not is_linear(Code.from_words(2, [(0, 0), (0, 1), (1, 1)]))


def test_generator_matrix_validation():
    """Тест проверок порождающей матрицы."""
    with pytest.raises(InputError):
        GeneratorMatrix.from_rows(4, [[1, 0], [0, 1]])
    with pytest.raises(PreconditionError):
        GeneratorMatrix.from_rows(3, [[1, 2], [2, 1]])


@pytest.mark.parametrize("q", [3, 5, 7])
def test_reed_solomon_meets_singleton(q):
    """Тест кодов Рида-Соломона: [q, k, q-k+1]_q и равенство в границе Синглтона."""
    for k in (k for k in range(1, q + 1) if q**k <= 400):
        code = make_reed_solomon(q, k)
        assert (code.n, code.size) == (q, q**k)
        assert code.distance == q - k + 1
        assert code.size == q ** (code.n - code.distance + 1)
        if code.size <= 125:
            assert is_linear(code)


def test_reed_solomon_rejects_bad_parameters():
    """Тест отказа для составного q и k вне [1, q]."""
    with pytest.raises(InputError):
        make_reed_solomon(4, 2)
    with pytest.raises(PreconditionError):
        make_reed_solomon(5, 6)


def test_random_codes_satisfy_singleton():
    """Тест границы Синглтона на случайных кодах."""
    for code in seeded_codes(100):
        assert satisfies_singleton(code)
        assert code.params.k_real <= code.n - code.distance + 1


def test_random_code_is_deterministic():
    """Тест детерминированности случайного кода по зерну."""
    assert random_code(3, 4, 10, seed=5) == random_code(3, 4, 10, seed=5)
    assert random_code(3, 4, 10, seed=5).size == 10
    with pytest.raises(PreconditionError):
        random_code(2, 2, 5, seed=1)


def test_from_symbols_preserves_params():
    """Тест переноса кода над символами на цифры."""
    code = Code.from_symbols(["aab", "bba", "abb"], alphabet="ab")
    assert code.words == ((0, 0, 1), (0, 1, 1), (1, 1, 0))
    assert code.distance == 1
    with pytest.raises(InputError):
        Code.from_symbols(["abc"], alphabet="ab")


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), data=st.data())
def test_permute_digits_preserves_params(seed, data):
    """Тест сохранения параметров при перестановке алфавита."""
    code = random_code(3, 4, 12, seed=seed)
    permutation = data.draw(st.permutations([0, 1, 2]))
    permuted = permute_digits(code, permutation)
    assert (permuted.n, permuted.size, permuted.distance) == (code.n, code.size, code.distance)


def test_permute_digits_rejects_non_permutation(repetition_code):
    """Тест отказа для не-перестановки."""
    with pytest.raises(InputError):
        permute_digits(repetition_code, [0, 0])


def test_word_strings():
    """Тест записи и разбора слов."""
    assert word_to_string((1, 0, 10)) == "10a"
    assert word_from_string("10a", 11) == (1, 0, 10)
    with pytest.raises(InputError):
        word_from_string("012", 2)


def test_code_file_roundtrip(tmp_path, hamming_code, hamming_file):
    """Тест чтения кода из файла."""
    assert load_code(hamming_file) == hamming_code
    assert loads_code(dumps_code(hamming_code)) == hamming_code


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"q": 2, "n": 3}',
        '{"q": 2, "n": 3, "words": ["000", "000"]}',
        '{"q": 2, "n": 3, "words": ["0000"]}',
        '{"q": 2, "n": 3, "words": ["002"]}',
    ],
)
def test_invalid_code_file(text):
    """Тест отказа для некорректного файла кода."""
    with pytest.raises(InputError):
        loads_code(text)


def test_missing_code_file(tmp_path):
    """Тест отсутствующего файла."""
    with pytest.raises(InputError):
        load_code(tmp_path / "missing.json")
