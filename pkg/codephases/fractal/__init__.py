"""Фрактал S_C, координатные подпространства и размерности Хаусдорфа."""

from codephases.fractal.subspace import CoordinateSubspace, subspace_count
from codephases.fractal.dimensions import (
    FractalDimensions,
    IntersectionDimension,
    ThresholdScan,
    box_count_estimate,
    fractal_dimensions,
    intersection_dimension,
    scan_subspaces,
    threshold_scan,
)
from codephases.fractal.similarity import similarity_dimension

__all__ = [
    "CoordinateSubspace",
    "FractalDimensions",
    "IntersectionDimension",
    "ThresholdScan",
    "box_count_estimate",
    "fractal_dimensions",
    "intersection_dimension",
    "scan_subspaces",
    "similarity_dimension",
    "subspace_count",
    "threshold_scan",
]
