"""Тесты для геометрии плоскости (R, delta)."""

from fractions import Fraction

import numpy as np
import pytest

from codephases.codes import Code
from codephases.internal.errors import InputError, PreconditionError
from codephases.plane import (
    CodePoint,
    PlanePoint,
    classical_bounds,
    cone_partition,
    empirical_envelope,
    is_certainly_isolated,
    lower_cone_contains,
    multiplicity_probe,
    plotkin_rate,
    render_plane_svg,
    singleton_rate,
)
from codephases.settings import RunConfig

P = PlanePoint(Fraction(1, 4), Fraction(1, 4))


def random_cloud(count: int, seed: int, grid: int = 24):
    """Случайные рациональные точки с R + delta < 1 и delta > 0."""
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < count:
        r, d = (int(x) for x in rng.integers(0, grid, size=2))
        if d >= 1 and r + d < grid:
            points.append(PlanePoint(Fraction(r, grid), Fraction(d, grid)))
    return points


def test_code_point(hamming_code):
    """Тест точки кода ([k]/n, d/n)."""
    point = CodePoint.from_code(hamming_code, tag="hamming")
    assert (point.R, point.delta) == (Fraction(4, 7), Fraction(3, 7))
    assert point.rate_real == pytest.approx(4 / 7)
    assert not point.in_domain
    with pytest.raises(PreconditionError):
        CodePoint.from_code(Code.from_words(2, [(0, 1)]))


def test_plane_point_validation():
    """Тест отказа для точки вне квадрата."""
    with pytest.raises(InputError):
        PlanePoint(Fraction(3, 2), Fraction(0))


@pytest.mark.parametrize(
    "q, labels",
    [
        (PlanePoint(Fraction(0), Fraction(0)), {"lower"}),
        (PlanePoint(Fraction(1, 2), Fraction(1, 2)), {"upper"}),
        (PlanePoint(Fraction(3, 4), Fraction(0)), {"left"}),
        (PlanePoint(Fraction(0), Fraction(3, 4)), {"right"}),
        (PlanePoint(Fraction(5, 8), Fraction(1, 8)), {"upper", "left"}),
        (P, {"lower", "upper", "left", "right"}),
    ],
)
def test_cone_partition(q, labels):
    """Тест классификации точек по четырем конусам."""
    assert cone_partition(P, q) == frozenset(labels)


def test_cone_requires_domain():
    """Тест отказа для вершины вне области."""
    outside = PlanePoint(Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(PreconditionError):
        lower_cone_contains(outside, P)
    with pytest.raises(PreconditionError):
        cone_partition(P, PlanePoint(Fraction(3, 4), Fraction(1, 2)))


def test_classical_bounds():
    """Тест границ Синглтона и Плоткина."""
    assert singleton_rate(2, Fraction(1, 2)) == Fraction(5, 6)
    assert plotkin_rate(2, Fraction(1, 4)) == Fraction(1, 2)
    assert plotkin_rate(3, Fraction(1, 2)) == Fraction(1, 4)
    assert classical_bounds(2, Fraction(1, 2)) == (Fraction(5, 6), Fraction(0))
    assert singleton_rate(2, 1) == Fraction(1, 3)
    with pytest.raises(InputError):
        plotkin_rate(1, Fraction(1, 2))
    with pytest.raises(InputError):
        singleton_rate(2, Fraction(3, 2))


def test_reed_solomon_point_is_isolated():
    """Тест изолированности точки выше прямой Плоткина."""
    assert is_certainly_isolated(PlanePoint(Fraction(1, 2), Fraction(1, 2)), 2)
    assert not is_certainly_isolated(PlanePoint(Fraction(1, 8), Fraction(1, 4)), 2)


def test_envelope_single_point():
    """Тест огибающей одной точки."""
    envelope = empirical_envelope([P])
    assert envelope.vertices == (P,)
    kinds = [kind for _, kind in envelope.polyline]
    assert kinds == ["axis", "peak", "axis"]
    assert envelope.polyline[0][0] == PlanePoint(Fraction(1, 3), Fraction(0))
    assert envelope.polyline[-1][0] == PlanePoint(Fraction(0), Fraction(1, 3))
    assert envelope.value_at(Fraction(1, 4)) == Fraction(1, 4)
    assert envelope.value_at(Fraction(1, 3)) == 0
    assert envelope.value_at(Fraction(1, 2)) is None


def test_envelope_two_vertices():
    """Тест стыка двух конусов."""
    left = PlanePoint(Fraction(1, 2), Fraction(1, 8))
    right = PlanePoint(Fraction(1, 8), Fraction(1, 2))
    envelope = empirical_envelope([right, left])
    assert envelope.vertices == (left, right)
    kinds = [kind for _, kind in envelope.polyline]
    assert kinds == ["axis", "peak", "junction", "peak", "axis"]


def test_envelope_drops_dominated_and_outside():
    """Тест отбрасывания доминируемых точек и точек вне области."""
    inner = PlanePoint(Fraction(1, 8), Fraction(1, 8))
    outside = PlanePoint(Fraction(1, 2), Fraction(1, 2))
    envelope = empirical_envelope([P, inner, outside, P])
    assert envelope.vertices == (P,)
    with pytest.raises(PreconditionError):
        empirical_envelope([outside])
    with pytest.raises(PreconditionError):
        empirical_envelope([])


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_envelope_properties(seed):
    """Тест идемпотентности, монотонности и взаимной недоминируемости вершин."""
    cloud = random_cloud(200, seed)
    envelope = empirical_envelope(cloud)

    assert empirical_envelope(envelope.vertices).vertices == envelope.vertices

    for p in envelope.vertices:
        for q in envelope.vertices:
            if p != q:
                assert not lower_cone_contains(p, q)

    subset = empirical_envelope(cloud[:50])
    for step in range(41):
        delta = Fraction(step, 40)
        small = subset.value_at(delta)
        if small is not None:
            assert envelope.value_at(delta) >= small

    deltas = [p.delta for p in envelope.vertices]
    rates = [p.R for p in envelope.vertices]
    assert deltas == sorted(set(deltas))
    assert rates == sorted(set(rates), reverse=True)


def test_multiplicity_probe_repetition(repetition_code):
    """Тест поиска кратностей для кода {000, 111}."""
    result = multiplicity_probe(repetition_code, a_max=2)
    assert result.found == (1,)
    assert result.not_found == (2,)
    witness = result.witnesses[1]
    assert (witness.n, witness.size, witness.distance) == (3, 2, 3)


def test_multiplicity_probe_with_better_code():
    """Тест свидетеля, полученного порчей лучшего кода."""
    code = Code.from_words(2, [(0, 0), (0, 1)])
    better = Code.from_words(2, [(0, 0, 0, 0), (0, 0, 1, 1), (1, 1, 0, 0), (1, 1, 1, 1)])
    result = multiplicity_probe(code, a_max=2, better_codes=[better])
    assert result.found == (1, 2)
    witness = result.witnesses[2]
    assert (witness.n, witness.size, witness.distance) == (4, 4, 2)


def test_multiplicity_probe_preconditions(repetition_code):
    """Тест предусловий поиска кратностей."""
    with pytest.raises(PreconditionError):
        multiplicity_probe(Code.from_words(2, [(0, 1)]), a_max=1)
    with pytest.raises(PreconditionError):
        multiplicity_probe(repetition_code, a_max=0)


def test_svg_is_deterministic():
    """Тест побайтной повторяемости SVG."""
    cloud = random_cloud(20, seed=7)
    envelope = empirical_envelope(cloud)
    first = render_plane_svg(cloud, 2, envelope=envelope, title="q=2")
    second = render_plane_svg(cloud, 2, envelope=envelope, title="q=2")
    assert first == second
    assert "<svg" in first


@pytest.mark.parametrize("seed", [4, 5])
def test_lower_cone_is_a_preorder(seed):
    """Тест рефлексивности и транзитивности отношения нижнего конуса."""
    config = RunConfig(subcommand="bound", randomized=True, seed=seed)
    cloud = random_cloud(40, config.seed)
    relation = np.array([[lower_cone_contains(p, q) for q in cloud] for p in cloud])
    assert relation.diagonal().all()
    composed = (relation.astype(int) @ relation.astype(int)) > 0
    assert not np.any(composed & ~relation)


def test_lower_cone_duality():
    """Тест: q в нижнем конусе p тогда и только тогда, когда p в верхнем конусе q."""
    config = RunConfig(subcommand="bound", randomized=True, seed=8)
    cloud = random_cloud(2000, config.seed)
    for p, q in zip(cloud[::2], cloud[1::2]):
        assert lower_cone_contains(p, q) == ("upper" in cone_partition(q, p))
