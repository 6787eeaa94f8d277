"""Общие фикстуры тестов."""

from pathlib import Path

import numpy as np
import pytest

from codephases.codes import Code, GeneratorMatrix, dump_code, make_linear_code, random_code

HAMMING_ROWS = [
    [1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 1, 1, 0, 1],
]


def seeded_codes(count: int, seed: int = 2024, max_size: int = 40):
    """Детерминированный набор случайных кодов с q из {2, 3, 5} и n <= 10."""
    rng = np.random.default_rng(seed)
    codes = []
    for _ in range(count):
        q = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(2, 11))
        size = int(rng.integers(2, min(q**n, max_size) + 1))
        codes.append(random_code(q, n, size, seed=int(rng.integers(2**31))))
    return codes


@pytest.fixture
def hamming_code() -> Code:
    """Код Хэмминга [7, 4, 3]_2."""
    return make_linear_code(GeneratorMatrix.from_rows(2, HAMMING_ROWS))


@pytest.fixture
def repetition_code() -> Code:
    """Код повторения {000, 111}."""
    return Code.from_words(2, [(0, 0, 0), (1, 1, 1)])


@pytest.fixture
def hamming_file(tmp_path: Path, hamming_code: Code) -> Path:
    path = tmp_path / "hamming.json"
    dump_code(hamming_code, path)
    return path


@pytest.fixture
def repetition_file(tmp_path: Path, repetition_code: Code) -> Path:
    path = tmp_path / "repetition.json"
    dump_code(repetition_code, path)
    return path
