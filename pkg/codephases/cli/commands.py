"""Подкоманды командной строки: каждая читает RunConfig и пишет артефакты."""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Sequence, Union

import numpy as np

from codephases.cli.artifacts import (
    POINT_COLUMNS,
    csv_text,
    json_text,
    point_rows,
    read_points_csv,
    write_text,
)
from codephases.cli.documents import (
    document_code,
    document_potential,
    document_seed,
    load_measure_document,
)
from codephases.codes import Code, ExactRate, is_linear, satisfies_singleton, word_to_string
from codephases.codes.linear import is_prime
from codephases.factories import CodeFactory, FamilyFactory
from codephases.fractal import (
    CoordinateSubspace,
    box_count_estimate,
    fractal_dimensions,
    threshold_scan,
)
from codephases.internal.errors import InputError, PreconditionError
from codephases.measures import (
    CylinderAssignment,
    MonotoneMap,
    check_semimeasure,
    hausdorff_measure,
    induced_multifractal_pf,
    measure_from_potential,
    potential_semimeasure,
    pushforward_semimeasure,
)
from codephases.plane import CodePoint, empirical_envelope, render_plane_svg
from codephases.settings import RunConfig
from codephases.spoiling import spoil_descendants
from codephases.thermo import (
    family_partition,
    family_zeta,
    language_generating,
    partition_function,
    product_grid,
    projection_state_and_vn_dim,
)

logger = logging.getLogger(__name__)

# Наибольшее число слов случайного кода в облаке
_CLOUD_MAX_SIZE: int = 256

Command = Callable[[RunConfig], int]


def _single_input(config: RunConfig) -> str:
    if len(config.inputs) != 1:
        raise InputError(f"Подкоманда {config.subcommand} ожидает один входной файл")
    return config.inputs[0]


def _code(config: RunConfig) -> Code:
    return CodeFactory.create_code(path=_single_input(config))


def _betas(config: RunConfig) -> List[float]:
    betas = config.options.get("betas") or []
    if not betas:
        raise InputError("Сетка beta пуста: задайте --betas или --beta-range")
    return [float(beta) for beta in betas]


def run_params(config: RunConfig) -> int:
    """Отчет о параметрах кода."""
    code = _code(config)
    params = code.params
    exact_rate = params.rate.as_fraction()
    report = {
        "n": params.n,
        "size": params.size,
        "q": params.q,
        "k_real": params.k_floor if exact_rate is not None else params.k_real,
        "k_floor": params.k_floor,
        "d": params.d,
        "R": exact_rate if exact_rate is not None else params.R,
        "R_floor": params.R_floor,
        "delta": params.delta,
        "singleton": satisfies_singleton(code) if params.d is not None else None,
        "linear": is_linear(code) if is_prime(code.q) else None,
    }
    write_text(config.output, json_text(config, {"params": report}))
    return 0


def run_spoil(config: RunConfig) -> int:
    """Точки потомков кода под численной порчей."""
    code = _code(config)
    points = spoil_descendants(code, int(config.options.get("steps", 1)), config.threads)
    write_text(config.output, csv_text(config, POINT_COLUMNS, point_rows(points)))
    return 0


def _random_cloud(config: RunConfig, q: int) -> List[CodePoint]:
    n_min = int(config.options.get("n_min", 2))
    n_max = int(config.options.get("n_max", 8))
    count = int(config.options.get("count", 100))
    if not 1 <= n_min <= n_max:
        raise InputError(f"Некорректный диапазон длин [{n_min}, {n_max}]")
    rng = np.random.default_rng(config.seed)
    points = []
    for index in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        upper = min(q**n, _CLOUD_MAX_SIZE)
        size = int(rng.integers(2, upper + 1))
        seed = int(rng.integers(2**32))
        code = CodeFactory.create_code(q=q, n=n, size=size, seed=seed)
        points.append(CodePoint.from_code(code, tag=f"random{index}"))
    return points


def _reed_solomon_cloud(q: int) -> List[CodePoint]:
    return [
        CodePoint.from_code(CodeFactory.create_code(q=q, k=k), tag=f"rs{q}_{k}")
        for k in range(1, q + 1)
    ]


def run_cloud(config: RunConfig) -> int:
    """Облако точек случайных кодов или кодов Рида-Соломона с графиком."""
    q = int(config.options.get("q", 2))
    source = config.options.get("source", "random")
    points = _reed_solomon_cloud(q) if source == "reed_solomon" else _random_cloud(config, q)
    write_text(config.output, csv_text(config, POINT_COLUMNS, point_rows(points)))
    if config.svg is not None:
        write_text(config.svg, render_plane_svg(points, q, title=f"q={q}"))
    return 0


def run_bound(config: RunConfig) -> int:
    """Огибающая нижних конусов облака точек."""
    points = read_points_csv(_single_input(config))
    envelope = empirical_envelope(points)
    rows = [
        [kind, p.R.numerator, p.R.denominator, p.delta.numerator, p.delta.denominator]
        for p, kind in envelope.polyline
    ]
    columns = ["kind", "R_num", "R_den", "delta_num", "delta_den"]
    write_text(config.output, csv_text(config, columns, rows))
    if config.svg is not None:
        q = min(p.q for p in points)
        write_text(config.svg, render_plane_svg(points, q, envelope=envelope, title=f"q={q}"))
    return 0


def _exact_or_float(rate: ExactRate) -> Union[Fraction, float]:
    exact = rate.as_fraction()
    return exact if exact is not None else float(rate)


def run_fractal(config: RunConfig) -> int:
    """Размерности S_C, оценки по ящикам, порог сечений и данные подпространства."""
    code = _code(config)
    payload: Dict[str, Any] = {
        "dim_SC": _exact_or_float(code.params.rate),
        "box_counts": {
            depth: _exact_or_float(box_count_estimate(code, depth))
            for depth in range(1, config.depth + 1)
        },
    }
    if code.size >= 2:
        scan = threshold_scan(code, config.threads, config.seed or 0)
        payload["threshold_scan"] = {
            "d": scan.d,
            "max_counts": scan.max_counts,
            "threshold": scan.threshold,
            "sampled": scan.sampled,
        }
    subspace = config.options.get("subspace")
    if subspace is not None:
        pi = CoordinateSubspace.parse(code.n, subspace)
        dims = fractal_dimensions(code, pi)
        state = projection_state_and_vn_dim(code, pi)
        payload["subspace"] = {
            "pi": pi.label(),
            "ell": pi.ell,
            "dim_Spi": dims.dim_Spi,
            "dim_SC_cap_pi": dims.dim_SC_cap_pi.value,
            "dim_SC_cap_Spi": dims.dim_SC_cap_Spi.value,
            "vn_dim": state.vn_dim,
            "dim_check_pi": state.dim_check_pi,
            "dim_check_Spi": state.dim_check_Spi,
        }
    write_text(config.output, json_text(config, payload))
    return 0


def run_partition(config: RunConfig) -> int:
    """Статистическая сумма кода на сетке beta."""
    code = _code(config)
    mode = config.options.get("mode", "closed")
    values = [partition_function(code, beta, mode, config.terms) for beta in _betas(config)]
    if mode == "series":
        columns = ["beta", "value", "tail_bound"]
        rows: List[List[Any]] = [[v.beta, v.value, v.tail_bound] for v in values]
    else:
        columns = ["beta", "value"]
        rows = [[v.beta, v.value] for v in values]
    write_text(config.output, csv_text(config, columns, rows))
    return 0


def _family_phases(config: RunConfig, path: str, betas: Sequence[float]) -> str:
    family = FamilyFactory.create_family(path=path)
    rows = []
    for beta in betas:
        zeta = family_zeta(family, beta, config.terms)
        union = family_partition(family, beta)
        rows.append([beta, zeta.value, zeta.status.value, zeta.tail_bound, union.value])
    columns = ["beta", "zeta", "zeta_status", "zeta_tail", "union_Z"]
    return csv_text(config, columns, rows)


def _product_phases(config: RunConfig, paths: Sequence[str], betas: Sequence[float]) -> str:
    codes = [CodeFactory.create_code(path=path) for path in paths]
    cells = len(betas) ** len(codes)
    if cells > config.max_cells:
        raise PreconditionError(f"Решетка из {cells} ячеек превышает бюджет {config.max_cells}")
    results = product_grid(codes, [betas] * len(codes), config.threads)
    columns = [f"beta_{index}" for index in range(1, len(codes) + 1)] + ["value"]
    rows = [list(result.betas) + [result.value] for result in results]
    return csv_text(config, columns, rows)


def run_phases(config: RunConfig) -> int:
    """Фазовая диаграмма семейства или произведения систем."""
    betas = _betas(config)
    family = config.options.get("family")
    product = config.options.get("product") or []
    if bool(family) == bool(product):
        raise InputError("Задайте ровно одно из --family или --product")
    if family:
        text = _family_phases(config, family, betas)
    else:
        text = _product_phases(config, product, betas)
    write_text(config.output, text)
    return 0


def _word_label(word: Sequence[Sequence[int]]) -> str:
    return ".".join(word_to_string(letter) for letter in word)


def _assignment_payload(mu: CylinderAssignment) -> Dict[str, Any]:
    layers = {
        str(length): {_word_label(word): value for word, value in mu.layer(length).items()}
        for length in range(mu.depth + 1)
    }
    return {"classification": check_semimeasure(mu).value, "depth": mu.depth, "layers": layers}


def _check_cells(config: RunConfig, letters: int) -> None:
    cells = sum(letters**length for length in range(config.depth + 1))
    if cells > config.max_cells:
        raise PreconditionError(f"Назначение из {cells} слов превышает бюджет {config.max_cells}")


def run_measure(config: RunConfig) -> int:
    """Назначение меры на цилиндрах по файлу описания."""
    path = _single_input(config)
    document = load_measure_document(path)
    code = document_code(document, Path(path).parent)
    _check_cells(config, code.size)
    extra: Dict[str, Any] = {}
    if document.kind == "hausdorff":
        mu = hausdorff_measure(code, config.depth, exact=config.exact)
    elif document.kind in ("encoder", "decoder"):
        f = MonotoneMap.encoder(code) if document.kind == "encoder" else MonotoneMap.decoder(code)
        mu = pushforward_semimeasure(f, config.depth, exact=config.exact)
    elif document.kind == "perron_frobenius":
        if config.exact:
            raise InputError("Мера Перрона-Фробениуса вещественная: --exact не поддерживается")
        pot = document_potential(document, code)
        pf, mu = induced_multifractal_pf(pot, document_seed(document, code).first(), config.depth)
        extra = {"rho": pf.rho, "iterations": pf.iterations, "residual": pf.residual}
    else:
        pot = document_potential(document, code, exact=config.exact)
        build = potential_semimeasure if document.semimeasure else measure_from_potential
        mu = build(pot, document_seed(document, code), config.depth, config.threads)
    payload = {"kind": document.kind, **extra, **_assignment_payload(mu)}
    write_text(config.output, json_text(config, payload))
    return 0


def run_entropy(config: RunConfig) -> int:
    """Структурная функция, производящая функция и энтропия языка кода."""
    code = _code(config)
    report = language_generating(
        code,
        t=config.options.get("t"),
        beta=config.options.get("beta"),
        cap=config.options.get("cap"),
    )
    exact_rate = report.rate.as_fraction()
    payload = {
        "structure_values": report.structure_values,
        "t": report.t,
        "G_value": report.g_value,
        "G_divergent": report.g_divergent,
        "entropy": exact_rate if exact_rate is not None else report.entropy,
    }
    write_text(config.output, json_text(config, payload))
    return 0


COMMANDS: Dict[str, Command] = {
    "params": run_params,
    "spoil": run_spoil,
    "cloud": run_cloud,
    "bound": run_bound,
    "fractal": run_fractal,
    "partition": run_partition,
    "phases": run_phases,
    "measure": run_measure,
    "entropy": run_entropy,
}


def run(config: RunConfig) -> int:
    """
    Выполняет подкоманду.

    Returns:
        Код возврата 0 при успехе

    Raises:
        CodePhasesError: Ошибка входа, предусловия или сходимости
    """
    try:
        command = COMMANDS[config.subcommand]
    except KeyError as e:
        raise InputError(f"Неизвестная подкоманда {config.subcommand!r}") from e
    logger.debug(f"Запуск {config.subcommand}, config={config.config_hash()}")
    return command(config)
