"""Параллельное отображение по пулу потоков."""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """
    Применяет функцию к элементам, сохраняя порядок результатов.

    Args:
        func: Чистая функция
        items: Входные элементы
        threads: Число потоков; 1 означает выполнение в текущем потоке

    Returns:
        Список результатов в порядке входа
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))
