"""Константы для библиотеки codephases."""

# Допуск для всех численных тождеств
TOLERANCE: float = 1e-12

# Бисекция: левая граница скобки и предел итераций
BISECTION_LOWER: float = 1e-9
BISECTION_MAX_ITER: int = 200

# Степенной метод Перрона-Фробениуса
POWER_ITERATION_MAX_ITER: int = 10_000

# Глубина и бюджет материализации цилиндров
DEFAULT_DEPTH_CAP: int = 8
DEFAULT_MAX_CELLS: int = 2_000_000

# Полный перебор подмножеств координат до этой длины, дальше выборка
EXHAUSTIVE_SCAN_MAX_N: int = 16
DEFAULT_SAMPLED_SUBSETS: int = 4_096

# Число членов ряда по умолчанию
SERIES_DEFAULT_TERMS: int = 200

# Значащие цифры при выводе вещественных чисел
FLOAT_DIGITS: int = 15

# Метка расходимости в артефактах
DIVERGENT_LABEL: str = "DIV"

# Символы цифр для текстового представления слов (q <= 36)
DIGIT_SYMBOLS: str = "0123456789abcdefghijklmnopqrstuvwxyz"
