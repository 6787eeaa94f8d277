"""Фабрики кодов и семейств."""

from codephases.factories.codes import CodeFactory
from codephases.factories.families import FamilyDocument, FamilyFactory, FamilyMemberDocument

__all__ = [
    "CodeFactory",
    "FamilyDocument",
    "FamilyFactory",
    "FamilyMemberDocument",
]
