"""
codephases - коды, их плоскость (R, delta) и статистическая механика кодов.

Точные параметры и порча кодов, геометрия нижних конусов, размерности фракталов S_C,
статистические суммы и KMS-состояния, меры и полумеры на цилиндрах.
"""

__version__ = "0.1.0"

from codephases.codes import Code, ExactRate, code_params, make_linear_code, make_reed_solomon
from codephases.factories import CodeFactory, FamilyFactory
from codephases.fractal import CoordinateSubspace, fractal_dimensions
from codephases.measures import CylinderAssignment, Potential, measure_from_potential
from codephases.plane import CodePoint, empirical_envelope
from codephases.settings import RunConfig, RuntimeSettings
from codephases.spoiling import numeric_spoil
from codephases.thermo import CodeFamily, critical_beta, partition_function

__all__ = [
    "Code",
    "CodeFactory",
    "CodeFamily",
    "CodePoint",
    "CoordinateSubspace",
    "CylinderAssignment",
    "ExactRate",
    "FamilyFactory",
    "Potential",
    "RunConfig",
    "RuntimeSettings",
    "__version__",
    "code_params",
    "critical_beta",
    "empirical_envelope",
    "fractal_dimensions",
    "make_linear_code",
    "make_reed_solomon",
    "measure_from_potential",
    "numeric_spoil",
    "partition_function",
]
