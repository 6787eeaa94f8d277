"""Точная геометрия точек кодов в плоскости (R, delta)."""

from codephases.plane.points import CodePoint, PlanePoint
from codephases.plane.cones import cone_partition, lower_cone_contains, tent_value
from codephases.plane.envelope import Envelope, empirical_envelope
from codephases.plane.bounds import (
    classical_bounds,
    is_certainly_isolated,
    plotkin_rate,
    singleton_rate,
)
from codephases.plane.multiplicity import ProbeResult, multiplicity_probe
from codephases.plane.plotting import render_plane_svg

__all__ = [
    "CodePoint",
    "Envelope",
    "PlanePoint",
    "ProbeResult",
    "classical_bounds",
    "cone_partition",
    "empirical_envelope",
    "is_certainly_isolated",
    "lower_cone_contains",
    "multiplicity_probe",
    "plotkin_rate",
    "render_plane_svg",
    "singleton_rate",
    "tent_value",
]
