"""Тесты для фабрик кодов и семейств."""

import json

import pytest

from codephases.codes import dump_code
from codephases.factories import CodeFactory, FamilyDocument, FamilyFactory
from codephases.internal.errors import InputError, PreconditionError
from tests.conftest import HAMMING_ROWS


def test_create_code_from_path(hamming_file, hamming_code):
    """Тест чтения кода из файла."""
    code = CodeFactory.create_code(path=hamming_file)
    assert code.words == hamming_code.words


def test_create_code_from_generator():
    """Тест построения линейного кода по порождающей матрице."""
    code = CodeFactory.create_code(q=2, generator=HAMMING_ROWS)
    assert (code.n, code.size, code.distance) == (7, 16, 3)


def test_create_code_reed_solomon():
    """Тест построения кода Рида-Соломона."""
    code = CodeFactory.create_code(q=5, k=2)
    assert (code.n, code.size, code.distance) == (5, 25, 4)


def test_create_code_random_is_deterministic():
    """Тест повторяемости случайного кода при одинаковом зерне."""
    first = CodeFactory.create_code(q=3, n=5, size=12, seed=42)
    second = CodeFactory.create_code(q=3, n=5, size=12, seed=42)
    assert first.words == second.words
    assert first.size == 12


def test_create_code_errors(tmp_path):
    """Тест ошибок создания кода."""
    with pytest.raises(InputError):
        CodeFactory.create_code(q=2, n=5, size=3)  # type: ignore[call-overload]
    with pytest.raises(InputError):
        CodeFactory.create_code(q=4, generator=[[1, 0], [0, 1]])
    with pytest.raises(InputError):
        CodeFactory.create_code(path=tmp_path / "missing.json")
    with pytest.raises(InputError):
        CodeFactory.create_code()  # type: ignore[call-overload]
    with pytest.raises(PreconditionError):
        CodeFactory.create_code(q=2, generator=[[1, 1], [1, 1]])


def test_create_code_invalid_file(tmp_path):
    """Тест отказа для файла с нарушенной схемой."""
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"q": 2, "n": 2, "words": ["012"]}), encoding="utf-8")
    with pytest.raises(InputError):
        CodeFactory.create_code(path=path)


def test_create_family_from_parameters():
    """Тест семейства из параметров."""
    family = FamilyFactory.create_family(q=2, parameters=[(3, 2, 3), (6, 4, None)])
    assert len(family) == 2
    assert family.members[1].d is None
    assert all(member.code is None for member in family.members)


def test_create_family_from_codes(hamming_code, repetition_code):
    """Тест семейства из готовых кодов."""
    family = FamilyFactory.create_family(codes=[repetition_code, hamming_code])
    assert family.q == 2
    assert family.members[1].code is hamming_code
    assert family.lengths_increasing()


def test_create_family_monotone_violation(hamming_code, repetition_code):
    """Тест нарушения монотонности d/n."""
    with pytest.raises(PreconditionError):
        FamilyFactory.create_family(codes=[repetition_code, hamming_code], monotone=True)


def test_create_family_from_path(tmp_path, repetition_code, hamming_code):
    """Тест семейства из файла с относительными путями кодов."""
    dump_code(repetition_code, tmp_path / "rep.json")
    dump_code(hamming_code, tmp_path / "ham.json")
    path = tmp_path / "family.json"
    path.write_text(json.dumps({"q": 2, "codes": ["rep.json", "ham.json"]}), encoding="utf-8")
    family = FamilyFactory.create_family(path=path)
    assert [member.n for member in family.members] == [3, 7]


def test_family_parameters_round_trip(tmp_path):
    """Тест записи и чтения семейства через параметры."""
    family = FamilyFactory.create_family(q=3, parameters=[(2, 3, 2), (4, 9, 3)])
    path = tmp_path / "family.json"
    path.write_text(FamilyFactory.dumps_parameters(family), encoding="utf-8")
    loaded = FamilyFactory.create_family(path=path)
    assert [(m.n, m.size, m.d) for m in loaded.members] == [(2, 3, 2), (4, 9, 3)]


def test_family_document_requires_one_source(tmp_path):
    """Тест документа семейства: ровно один источник."""
    with pytest.raises(ValueError):
        FamilyDocument(q=2)
    path = tmp_path / "family.json"
    path.write_text(
        json.dumps({"q": 2, "members": [{"n": 1, "size": 2}], "codes": ["c.json"]}),
        encoding="utf-8",
    )
    with pytest.raises(InputError):
        FamilyFactory.create_family(path=path)
    with pytest.raises(InputError):
        FamilyFactory.create_family()  # type: ignore[call-overload]
