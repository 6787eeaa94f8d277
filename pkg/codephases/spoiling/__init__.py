"""Операции порчи кода и потомки в нижнем конусе."""

from codephases.spoiling.operations import (
    Delete,
    Insert,
    Restrict,
    SpoilKind,
    SpoilOp,
    SpoilOutcome,
    apply_spoiling,
    class_sizes,
    restrict_classes,
)
from codephases.spoiling.numeric import numeric_spoil
from codephases.spoiling.descendants import spoil_descendants

__all__ = [
    "Delete",
    "Insert",
    "Restrict",
    "SpoilKind",
    "SpoilOp",
    "SpoilOutcome",
    "apply_spoiling",
    "class_sizes",
    "numeric_spoil",
    "restrict_classes",
    "spoil_descendants",
]
