"""Запись артефактов: CSV с заголовком версии и JSON с блоком meta."""

import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

from codephases.internal.errors import InputError, PreconditionError
from codephases.internal.serializers import format_number, serialize_for_artifact
from codephases.internal.version import detect_tool_version
from codephases.plane import CodePoint
from codephases.settings import RunConfig

TOOL_NAME: str = "codephases"

POINT_COLUMNS: List[str] = [
    "n",
    "size",
    "d",
    "q",
    "R_num",
    "R_den",
    "delta_num",
    "delta_den",
    "tag",
]


def artifact_meta(config: RunConfig) -> Dict[str, str]:
    return {"tool": TOOL_NAME, "version": detect_tool_version(), "config": config.config_hash()}


def csv_text(config: RunConfig, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    CSV с первой строкой-комментарием "# codephases <версия> config=<хэш>".

    Ячейки форматируются format_number: Fraction как num/den, расходимость как DIV.
    """
    buffer = io.StringIO()
    meta = artifact_meta(config)
    buffer.write(f"# {meta['tool']} {meta['version']} config={meta['config']}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_number(cell) for cell in row])
    return buffer.getvalue()


def json_text(config: RunConfig, payload: Dict[str, Any]) -> str:
    document = {"meta": artifact_meta(config), **payload}
    return (
        json.dumps(serialize_for_artifact(document), indent=2, sort_keys=True, ensure_ascii=False)
        + "\n"
    )


def write_text(path: Optional[str], text: str) -> None:
    """Пишет артефакт в файл или в stdout, если путь не задан."""
    if path is None:
        sys.stdout.write(text)
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")


def point_rows(points: Iterable[CodePoint]) -> List[List[Any]]:
    ordered = sorted(points, key=lambda p: (p.delta, p.R, p.n, p.size, p.tag))
    return [
        [
            p.n,
            p.size,
            p.d,
            p.q,
            p.R.numerator,
            p.R.denominator,
            p.delta.numerator,
            p.delta.denominator,
            p.tag,
        ]
        for p in ordered
    ]


def read_points_csv(path: str) -> List[CodePoint]:
    """
    Читает облако точек в формате POINT_COLUMNS; строки-комментарии "#" пропускаются.

    Raises:
        InputError: Ошибка чтения или формата
        PreconditionError: Файл не содержит точек
    """
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise InputError(f"Не удалось прочитать {path}: {e}") from e
    body = [line for line in lines if line.strip() and not line.startswith("#")]
    if not body:
        raise PreconditionError(f"Файл {path} не содержит точек")
    reader = csv.DictReader(body)
    missing = set(POINT_COLUMNS) - set(reader.fieldnames or [])
    if missing:
        raise InputError(f"В файле {path} нет колонок {sorted(missing)}")
    points = []
    for line_number, row in enumerate(reader, start=2):
        try:
            points.append(
                CodePoint(
                    R=Fraction(int(row["R_num"]), int(row["R_den"])),
                    delta=Fraction(int(row["delta_num"]), int(row["delta_den"])),
                    n=int(row["n"]),
                    size=int(row["size"]),
                    d=int(row["d"]),
                    q=int(row["q"]),
                    tag=row["tag"],
                )
            )
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"{path}:{line_number}: некорректная точка: {e}") from e
    if not points:
        raise PreconditionError(f"Файл {path} не содержит точек")
    return points
