"""Детерминированные SVG-графики плоскости кодов."""

import io
from fractions import Fraction
from typing import Iterable, Optional

from matplotlib.figure import Figure

from codephases.plane.bounds import plotkin_rate, singleton_rate
from codephases.plane.envelope import Envelope
from codephases.plane.points import PlanePoint

# Фиксированная соль для идентификаторов SVG
SVG_HASH_SALT: str = "codephases"

_GRID_STEPS: int = 200


def render_plane_svg(
    points: Iterable[PlanePoint],
    q: int,
    envelope: Optional[Envelope] = None,
    title: str = "",
) -> str:
    """
    Рисует облако точек кодов, огибающую и границы Синглтона и Плоткина.

    Ось delta горизонтальна, ось R вертикальна.

    Args:
        points: Точки кодов
        q: Размер алфавита для границ
        envelope: Огибающая нижних конусов
        title: Заголовок графика

    Returns:
        Текст SVG, одинаковый для одинаковых входов
    """
    import matplotlib

    points = sorted(points, key=lambda p: (p.delta, p.R))
    grid = [Fraction(i, _GRID_STEPS) for i in range(_GRID_STEPS + 1)]

    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}):
        fig = Figure(figsize=(6, 6))
        ax = fig.add_subplot(1, 1, 1)
        ax.plot(
            [float(x) for x in grid],
            [float(plotkin_rate(q, x)) for x in grid],
            color="tab:red",
            linestyle="--",
            label="Plotkin",
        )
        ax.plot(
            [float(x) for x in grid],
            [float(singleton_rate(q, x)) for x in grid],
            color="tab:green",
            linestyle=":",
            label="Singleton",
        )
        if points:
            ax.scatter(
                [float(p.delta) for p in points],
                [float(p.R) for p in points],
                s=8,
                color="tab:blue",
                label="codes",
            )
        if envelope is not None:
            ax.plot(
                [float(p.delta) for p, _ in envelope.polyline],
                [float(p.R) for p, _ in envelope.polyline],
                color="black",
                linewidth=1.2,
                label="envelope",
            )
        ax.set_xlim(0, 1)
        ax.set_ylim(0, 1)
        ax.set_xlabel("delta")
        ax.set_ylabel("R")
        if title:
            ax.set_title(title)
        ax.legend(loc="upper right")
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()
