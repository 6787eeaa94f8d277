"""Фабрика кодов из файлов, порождающих матриц и параметров."""

import logging
from pathlib import Path
from typing import Optional, Sequence, Union, overload

from codephases.codes import (
    Code,
    GeneratorMatrix,
    load_code,
    make_linear_code,
    make_reed_solomon,
    random_code,
)
from codephases.internal.errors import CodePhasesError, InputError

logger = logging.getLogger(__name__)


class CodeFactory:
    """
    Единая точка создания кодов.

    Источник выбирается по набору переданных аргументов: путь к файлу,
    порождающая матрица, параметры Рида-Соломона или параметры случайного кода.
    """

    @staticmethod
    def _build(
        path: Optional[Union[str, Path]],
        q: Optional[int],
        generator: Optional[Sequence[Sequence[int]]],
        k: Optional[int],
        n: Optional[int],
        size: Optional[int],
        seed: Optional[int],
    ) -> Code:
        """Выбирает конструктор по переданным параметрам."""
        if path is not None:
            return load_code(path)
        if q is None:
            raise InputError("Не задан ни путь к файлу, ни размер алфавита q")
        if generator is not None:
            return make_linear_code(GeneratorMatrix.from_rows(q, generator))
        if k is not None:
            return make_reed_solomon(q, k)
        if n is not None and size is not None:
            if seed is None:
                raise InputError("Случайный код требует seed")
            return random_code(q, n, size, seed)
        raise InputError("Недостаточно параметров для построения кода")

    @overload
    @staticmethod
    def create_code(*, path: Union[str, Path]) -> Code:
        """Читает код из JSON-файла."""
        ...

    @overload
    @staticmethod
    def create_code(*, q: int, generator: Sequence[Sequence[int]]) -> Code:
        """Строит линейный код по порождающей матрице."""
        ...

    @overload
    @staticmethod
    def create_code(*, q: int, k: int) -> Code:
        """Строит код Рида-Соломона [q, k, q-k+1]_q."""
        ...

    @overload
    @staticmethod
    def create_code(*, q: int, n: int, size: int, seed: int) -> Code:
        """Выбирает случайный код."""
        ...

    @staticmethod
    def create_code(
        *,
        path: Optional[Union[str, Path]] = None,
        q: Optional[int] = None,
        generator: Optional[Sequence[Sequence[int]]] = None,
        k: Optional[int] = None,
        n: Optional[int] = None,
        size: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> Code:
        """
        Создает код из указанного источника.

        Args:
            path: JSON-файл кода
            q: Размер алфавита
            generator: Строки порождающей матрицы (q простое)
            k: Размерность кода Рида-Соломона
            n: Длина случайного кода
            size: Число слов случайного кода
            seed: Зерно случайного кода

        Returns:
            Код

        Raises:
            CodePhasesError: Ошибка входных данных или предусловия
        """
        try:
            code = CodeFactory._build(path, q, generator, k, n, size, seed)
        except CodePhasesError as e:
            logger.warning(f"⚠️ Код не создан: {e}")
            raise
        logger.debug(f"Создан код q={code.q}, n={code.n}, #C={code.size}")
        return code
