"""Фабрика семейств кодов."""

import json
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union, overload

from pydantic import BaseModel, Field, ValidationError, model_validator

from codephases.codes import Code, load_code
from codephases.internal.errors import CodePhasesError, InputError
from codephases.thermo.family import CodeFamily

logger = logging.getLogger(__name__)


class FamilyMemberDocument(BaseModel):
    """Параметры одного кода семейства."""

    n: int = Field(..., ge=1)
    size: int = Field(..., ge=1)
    d: Optional[int] = Field(default=None, ge=1)


class FamilyDocument(BaseModel):
    """
    Файл семейства: параметры членов или пути к файлам кодов.

    Пути считаются относительно каталога файла семейства.
    """

    q: int = Field(..., ge=2, le=36)
    monotone: bool = False
    members: List[FamilyMemberDocument] = Field(default_factory=list)
    codes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _one_source(self) -> "FamilyDocument":
        if bool(self.members) == bool(self.codes):
            raise ValueError("Нужно задать ровно одно из полей members или codes")
        return self


class FamilyFactory:
    """Создает CodeFamily из параметров, кодов или файла описания."""

    @staticmethod
    def _from_document(document: FamilyDocument, base: Path) -> CodeFamily:
        if document.codes:
            codes = [load_code(base / path) for path in document.codes]
            if any(code.q != document.q for code in codes):
                raise InputError(f"Код семейства не над q={document.q}")
            return CodeFamily.from_codes(codes, monotone=document.monotone)
        parameters = [(member.n, member.size, member.d) for member in document.members]
        return CodeFamily.from_parameters(document.q, parameters, monotone=document.monotone)

    @staticmethod
    def load_document(path: Union[str, Path]) -> FamilyDocument:
        try:
            return FamilyDocument.model_validate_json(Path(path).read_text(encoding="utf-8"))
        except OSError as e:
            raise InputError(f"Не удалось прочитать {path}: {e}") from e
        except ValidationError as e:
            raise InputError(f"Некорректный файл семейства: {e}") from e

    @overload
    @staticmethod
    def create_family(*, path: Union[str, Path]) -> CodeFamily:
        """Читает семейство из JSON-файла."""
        ...

    @overload
    @staticmethod
    def create_family(*, codes: Sequence[Code], monotone: bool = False) -> CodeFamily:
        """Семейство из готовых кодов."""
        ...

    @overload
    @staticmethod
    def create_family(
        *, q: int, parameters: Sequence[Tuple[int, int, Optional[int]]], monotone: bool = False
    ) -> CodeFamily:
        """Семейство из параметров (n_r, #C_r, d_r)."""
        ...

    @staticmethod
    def create_family(
        *,
        path: Optional[Union[str, Path]] = None,
        codes: Optional[Sequence[Code]] = None,
        q: Optional[int] = None,
        parameters: Optional[Sequence[Tuple[int, int, Optional[int]]]] = None,
        monotone: bool = False,
    ) -> CodeFamily:
        """
        Создает семейство из файла, списка кодов или параметров.

        Raises:
            CodePhasesError: Ошибка входных данных или нарушение монотонности
        """
        try:
            if path is not None:
                document = FamilyFactory.load_document(path)
                family = FamilyFactory._from_document(document, Path(path).parent)
            elif codes is not None:
                family = CodeFamily.from_codes(codes, monotone=monotone)
            elif q is not None and parameters is not None:
                family = CodeFamily.from_parameters(q, parameters, monotone=monotone)
            else:
                raise InputError("Недостаточно параметров для построения семейства")
        except CodePhasesError as e:
            logger.warning(f"⚠️ Семейство не создано: {e}")
            raise
        logger.debug(f"Создано семейство из {len(family)} кодов над q={family.q}")
        return family

    @staticmethod
    def dumps_parameters(family: CodeFamily) -> str:
        """JSON-описание семейства через параметры членов."""
        document = FamilyDocument(
            q=family.q,
            monotone=family.monotone,
            members=[FamilyMemberDocument(n=m.n, size=m.size, d=m.d) for m in family.members],
        )
        return json.dumps(document.model_dump(exclude={"codes"}), indent=2, sort_keys=True) + "\n"
