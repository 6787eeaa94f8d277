"""Меры и полумеры на цилиндрах, потенциалы Кина и операторы переноса."""

from codephases.measures.cylinder import (
    CylinderAssignment,
    CylinderFunction,
    MeasureClass,
    check_semimeasure,
    cylinder_words,
)
from codephases.measures.potential import (
    Potential,
    PotentialKind,
    SeedWord,
    measure_from_potential,
    potential_semimeasure,
)
from codephases.measures.hausdorff import (
    hausdorff_measure,
    radon_nikodym_constant,
    uniform_potential,
)
from codephases.measures.ruelle import ruelle_apply
from codephases.measures.semimeasure import (
    MonotoneMap,
    critical_beta_semimeasure,
    mixture_semimeasure,
    pushforward_semimeasure,
    renormalize_semimeasure,
    semimeasure_kms_value,
    semimeasure_partition,
)
from codephases.measures.multifractal import (
    PerronFrobenius,
    family_potential,
    induced_multifractal_pf,
    induced_multifractal_uniform,
    perron_frobenius,
)

__all__ = [
    "CylinderAssignment",
    "CylinderFunction",
    "MeasureClass",
    "MonotoneMap",
    "PerronFrobenius",
    "Potential",
    "PotentialKind",
    "SeedWord",
    "check_semimeasure",
    "critical_beta_semimeasure",
    "cylinder_words",
    "family_potential",
    "hausdorff_measure",
    "induced_multifractal_pf",
    "induced_multifractal_uniform",
    "measure_from_potential",
    "mixture_semimeasure",
    "perron_frobenius",
    "potential_semimeasure",
    "pushforward_semimeasure",
    "radon_nikodym_constant",
    "renormalize_semimeasure",
    "ruelle_apply",
    "semimeasure_kms_value",
    "semimeasure_partition",
    "uniform_potential",
]
