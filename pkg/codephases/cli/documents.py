"""Файл описания меры для подкоманды measure."""

from fractions import Fraction
from pathlib import Path
from typing import Dict, Hashable, List, Literal, Union

from pydantic import BaseModel, Field, ValidationError

from codephases.codes import Code, Word, load_code, word_from_string
from codephases.internal.errors import InputError
from codephases.measures import Potential, SeedWord

MeasureKind = Literal["hausdorff", "potential", "encoder", "decoder", "perron_frobenius"]


class MeasureDocument(BaseModel):
    """
    Описание меры.

    Ключи lambdas и weights: слово "010" (глубина 1) или пара "010,111" для W(ab)
    (глубина 2). Значения weights - строки "1/2" или десятичные, читаются точно.
    """

    kind: MeasureKind
    code: str = Field(..., description="Путь к файлу кода относительно описания")
    beta: float = Field(default=1.0, gt=0)
    lambdas: Dict[str, float] = Field(default_factory=dict)
    weights: Dict[str, str] = Field(default_factory=dict)
    seed: List[str] = Field(default_factory=list, description="Период x0 по буквам")
    semimeasure: bool = Field(default=False, description="Разрешить sum W < 1")


def load_measure_document(path: Union[str, Path]) -> MeasureDocument:
    try:
        return MeasureDocument.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise InputError(f"Не удалось прочитать {path}: {e}") from e
    except ValidationError as e:
        raise InputError(f"Некорректное описание меры: {e}") from e


def document_code(document: MeasureDocument, base: Path) -> Code:
    return load_code(base / document.code)


def _parse_key(key: str, q: int) -> Hashable:
    parts = [word_from_string(part.strip(), q) for part in key.split(",")]
    if len(parts) == 1:
        return parts[0]
    if len(parts) == 2:
        return (parts[0], parts[1])
    raise InputError(f"Ключ {key!r}: ожидалось слово или пара слов")


def document_potential(document: MeasureDocument, code: Code, exact: bool = False) -> Potential:
    """
    Потенциал из lambdas (при beta документа) или из значений weights.

    Args:
        document: Описание меры
        code: Код, буквы которого несут потенциал
        exact: Сохранить weights как Fraction; иначе они приводятся к float

    Raises:
        InputError: Нет ровно одного источника или exact запрошен для lambdas
    """
    if bool(document.lambdas) == bool(document.weights):
        raise InputError("Задайте ровно одно из полей lambdas или weights")
    letters = tuple(sorted(code.words))
    if document.lambdas:
        if exact:
            raise InputError("Потенциал из lambdas вещественный: --exact требует поле weights")
        lambdas = {_parse_key(key, code.q): value for key, value in document.lambdas.items()}
        return Potential.from_lambdas(lambdas, document.beta, letters=letters)
    try:
        weights: Dict[Hashable, Union[Fraction, float]] = {
            _parse_key(key, code.q): Fraction(value) for key, value in document.weights.items()
        }
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"Некорректное значение веса: {e}") from e
    if not exact:
        weights = {key: float(value) for key, value in weights.items()}
    return Potential.from_weights(weights, letters=letters)


def document_seed(document: MeasureDocument, code: Code) -> SeedWord:
    if not document.seed:
        return SeedWord.constant(sorted(code.words)[0])
    period: List[Word] = [word_from_string(text, code.q) for text in document.seed]
    return SeedWord(period=tuple(period))
