"""Иерархия исключений codephases."""


class CodePhasesError(Exception):
    """Базовое исключение библиотеки."""

    exit_code: int = 1
    kind: str = "error"


class InputError(CodePhasesError, ValueError):
    """Некорректные входные данные: цифры, длины, формат файла."""

    exit_code = 2
    kind = "input"


class PreconditionError(CodePhasesError, ValueError):
    """Нарушено предусловие операции."""

    exit_code = 3
    kind = "precondition"


class ConvergenceError(CodePhasesError, RuntimeError):
    """Численный метод не достиг требуемой точности."""

    exit_code = 4
    kind = "convergence"
