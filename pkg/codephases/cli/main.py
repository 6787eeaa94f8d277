"""Точка входа командной строки codephases."""

import argparse
import json
import logging
import math
import sys
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from codephases.cli.commands import run
from codephases.internal.constants import DEFAULT_DEPTH_CAP, DEFAULT_MAX_CELLS, SERIES_DEFAULT_TERMS
from codephases.internal.errors import CodePhasesError, InputError
from codephases.settings import RunConfig, RuntimeSettings

logger = logging.getLogger(__name__)

# Поля RunConfig, которые не попадают в options подкоманды
_CONFIG_FIELDS = frozenset(
    {
        "inputs",
        "seed",
        "depth",
        "terms",
        "max_cells",
        "exact",
        "output",
        "svg",
        "threads",
        "verbose",
    }
)


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="Путь основного артефакта (иначе stdout)")
    common.add_argument("--seed", type=int, help="Зерно генератора случайных чисел")
    common.add_argument("--threads", type=int, help="Число потоков (иначе CODEPHASES_THREADS)")
    common.add_argument("--depth", type=int, default=DEFAULT_DEPTH_CAP, help="Глубина цилиндров")
    common.add_argument("--terms", type=int, default=SERIES_DEFAULT_TERMS, help="Число членов")
    common.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS, help="Бюджет ячеек")
    common.add_argument("--exact", action="store_true", help="Рациональный вывод")
    common.add_argument("-v", "--verbose", action="store_true", help="Отладочный вывод")
    return common


def _add_beta_grid(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--betas", type=float, nargs="+", help="Значения beta")
    group.add_argument(
        "--beta-range",
        type=float,
        nargs=3,
        metavar=("START", "STOP", "STEP"),
        help="Сетка START, START+STEP, ..., STOP",
    )


def _build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="codephases",
        description="Параметры кодов, плоскость (R, delta), фракталы, статистические суммы и меры.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    params = sub.add_parser("params", parents=[common], help="Параметры кода")
    params.add_argument("inputs", nargs=1, metavar="CODE")

    spoil = sub.add_parser("spoil", parents=[common], help="Потомки кода под порчей (CSV)")
    spoil.add_argument("inputs", nargs=1, metavar="CODE")
    spoil.add_argument("--steps", type=int, default=1, help="Число шагов порчи")

    cloud = sub.add_parser("cloud", parents=[common], help="Облако точек кодов (CSV + SVG)")
    cloud.add_argument("--q", type=int, default=2, help="Размер алфавита")
    source = cloud.add_mutually_exclusive_group()
    source.add_argument("--random", dest="source", action="store_const", const="random")
    source.add_argument(
        "--reed-solomon", dest="source", action="store_const", const="reed_solomon"
    )
    cloud.add_argument("--n-min", type=int, default=2)
    cloud.add_argument("--n-max", type=int, default=8)
    cloud.add_argument("--count", type=int, default=100)
    cloud.add_argument("--svg", help="Путь SVG-графика")
    cloud.set_defaults(inputs=[])

    bound = sub.add_parser("bound", parents=[common], help="Огибающая облака точек (CSV + SVG)")
    bound.add_argument("inputs", nargs=1, metavar="POINTS")
    bound.add_argument("--svg", help="Путь SVG-графика")

    fractal = sub.add_parser("fractal", parents=[common], help="Размерности S_C (JSON)")
    fractal.add_argument("inputs", nargs=1, metavar="CODE")
    fractal.add_argument("--subspace", help='Подпространство вида "1=0,3=1"')

    partition = sub.add_parser("partition", parents=[common], help="Z_C(beta) на сетке (CSV)")
    partition.add_argument("inputs", nargs=1, metavar="CODE")
    partition.add_argument("--mode", choices=["closed", "series"], default="closed")
    _add_beta_grid(partition)

    phases = sub.add_parser("phases", parents=[common], help="Фазовая диаграмма (CSV)")
    target = phases.add_mutually_exclusive_group(required=True)
    target.add_argument("--family", help="JSON-описание семейства")
    target.add_argument("--product", nargs="+", help="Файлы кодов систем произведения")
    _add_beta_grid(phases)
    phases.set_defaults(inputs=[])

    measure = sub.add_parser("measure", parents=[common], help="Назначение меры (JSON)")
    measure.add_argument("inputs", nargs=1, metavar="SPEC")

    entropy = sub.add_parser("entropy", parents=[common], help="Язык кода и энтропия (JSON)")
    entropy.add_argument("inputs", nargs=1, metavar="CODE")
    argument = entropy.add_mutually_exclusive_group()
    argument.add_argument("--t", type=float, help="Аргумент производящей функции")
    argument.add_argument("--beta", type=float, help="Аргумент t = q^(-beta)")
    entropy.add_argument("--cap", type=int, help="Наибольшая длина для s(N)")
    return parser


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return _build_parser().parse_args(argv)


def beta_grid(start: float, stop: float, step: float) -> List[float]:
    """Равномерная сетка от start до stop включительно."""
    if not step > 0 or stop < start:
        raise InputError(f"Некорректная сетка beta: {start}, {stop}, {step}")
    count = math.floor((stop - start) / step + 1e-9) + 1
    return [round(start + index * step, 12) for index in range(count)]


def build_config(args: argparse.Namespace) -> RunConfig:
    """
    Собирает RunConfig из разобранных аргументов.

    Raises:
        InputError: Если конфигурация не проходит валидацию
    """
    values = vars(args)
    options: Dict[str, Any] = {
        key: value
        for key, value in values.items()
        if key not in _CONFIG_FIELDS and key != "subcommand" and value is not None
    }
    beta_range = options.pop("beta_range", None)
    if beta_range is not None:
        options["betas"] = beta_grid(*beta_range)
    if args.subcommand == "cloud":
        options.setdefault("source", "random")
    randomized = args.subcommand == "cloud" and options["source"] == "random"
    threads = args.threads if args.threads is not None else RuntimeSettings().threads
    try:
        return RunConfig(
            subcommand=args.subcommand,
            inputs=list(args.inputs),
            seed=args.seed,
            randomized=randomized,
            depth=args.depth,
            terms=args.terms,
            max_cells=args.max_cells,
            exact=args.exact,
            output=args.output,
            svg=values.get("svg"),
            threads=threads,
            verbose=args.verbose,
            options=options,
        )
    except ValidationError as e:
        raise InputError(f"Некорректная конфигурация: {e}") from e


def _error_record(error: CodePhasesError) -> str:
    record = {"error": error.kind, "message": str(error), "exit_code": error.exit_code}
    return json.dumps(record, ensure_ascii=False, sort_keys=True)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Разбирает аргументы и выполняет подкоманду.

    Ошибки библиотеки превращаются в JSON-запись в stderr и код возврата:
    2 - ошибка входа, 3 - предусловие, 4 - отсутствие сходимости.
    """
    args = _parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return run(build_config(args))
    except ValidationError as e:
        error: CodePhasesError = InputError(str(e))
    except CodePhasesError as e:
        error = e
    logger.warning(f"⚠️ {args.subcommand} завершилась с ошибкой: {error}")
    sys.stderr.write(_error_record(error) + "\n")
    return error.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
