"""Коды, их параметры и конструкторы."""

from codephases.codes.code import (
    Code,
    CodeParams,
    ExactRate,
    code_params,
    compare_rates,
    min_distance,
    min_distance_pairs,
    permute_digits,
    satisfies_singleton,
)
from codephases.codes.io import CodeDocument, dump_code, dumps_code, load_code, loads_code
from codephases.codes.linear import (
    GeneratorMatrix,
    is_linear,
    make_linear_code,
    make_reed_solomon,
    min_weight,
)
from codephases.codes.sampling import random_code
from codephases.codes.words import Word, hamming_distance, word_from_string, word_to_string

__all__ = [
    "Code",
    "CodeDocument",
    "CodeParams",
    "ExactRate",
    "GeneratorMatrix",
    "Word",
    "code_params",
    "compare_rates",
    "dump_code",
    "dumps_code",
    "hamming_distance",
    "is_linear",
    "load_code",
    "loads_code",
    "make_linear_code",
    "make_reed_solomon",
    "min_distance",
    "min_distance_pairs",
    "min_weight",
    "permute_digits",
    "random_code",
    "satisfies_singleton",
    "word_from_string",
    "word_to_string",
]
