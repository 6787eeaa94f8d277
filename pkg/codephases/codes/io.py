"""Чтение и запись кодов в JSON."""

import json
from pathlib import Path
from typing import List, Union

from pydantic import BaseModel, Field, ValidationError

from codephases.codes.code import Code
from codephases.codes.words import word_from_string, word_to_string
from codephases.internal.errors import InputError


class CodeDocument(BaseModel):
    """Файл кода: {"q": int, "n": int, "words": [строки цифр]}."""

    q: int = Field(..., ge=2, le=36, description="Размер алфавита")
    n: int = Field(..., ge=1, description="Длина слов")
    words: List[str] = Field(..., min_length=1, description="Слова в цифрах основания q")


def code_from_document(document: CodeDocument) -> Code:
    """Строит код из документа, проверяя длины и цифры."""
    words = [word_from_string(text, document.q) for text in document.words]
    if len(set(words)) != len(words):
        raise InputError("В файле кода есть повторяющиеся слова")
    return Code.from_words(document.q, words, n=document.n)


def code_to_document(code: Code) -> CodeDocument:
    return CodeDocument(q=code.q, n=code.n, words=[word_to_string(w) for w in code.words])


def dumps_code(code: Code) -> str:
    """Каноническая JSON-строка кода."""
    return json.dumps(code_to_document(code).model_dump(), indent=2, sort_keys=True) + "\n"


def loads_code(text: str) -> Code:
    """
    Разбирает JSON-строку кода.

    Raises:
        InputError: При синтаксической ошибке или нарушении схемы
    """
    try:
        document = CodeDocument.model_validate_json(text)
    except ValidationError as e:
        raise InputError(f"Некорректный файл кода: {e}") from e
    return code_from_document(document)


def load_code(path: Union[str, Path]) -> Code:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Не удалось прочитать {path}: {e}") from e
    return loads_code(text)


def dump_code(code: Code, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps_code(code), encoding="utf-8")
