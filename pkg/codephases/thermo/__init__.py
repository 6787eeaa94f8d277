"""Статистические суммы, KMS-состояния и критические температуры."""

from codephases.thermo.critical import critical_beta
from codephases.thermo.family import (
    CodeFamily,
    FamilyMember,
    family_critical_beta,
    family_dimension,
    family_partition,
    family_weights,
    family_zeta,
    lambda_series,
)
from codephases.thermo.kms import (
    ProjectionState,
    keane_sum,
    kms_state_value,
    projection_state_and_vn_dim,
)
from codephases.thermo.language import LanguageReport, language_generating, structure_function
from codephases.thermo.partition import code_log_ratio, partition_function
from codephases.thermo.product import ProductPartition, product_grid, product_partition
from codephases.thermo.values import PartitionStatus, PartitionValue
from codephases.thermo.weights import Weights

__all__ = [
    "CodeFamily",
    "FamilyMember",
    "LanguageReport",
    "PartitionStatus",
    "PartitionValue",
    "ProductPartition",
    "ProjectionState",
    "Weights",
    "code_log_ratio",
    "critical_beta",
    "family_critical_beta",
    "family_dimension",
    "family_partition",
    "family_weights",
    "family_zeta",
    "keane_sum",
    "kms_state_value",
    "lambda_series",
    "language_generating",
    "partition_function",
    "product_grid",
    "product_partition",
    "projection_state_and_vn_dim",
    "structure_function",
]
