from __future__ import annotations

import sys
from collections.abc import Iterable
from typing import Callable, Optional, TypeVar

import numpy as np
from tqdm import tqdm

T = TypeVar('T')
R = TypeVar('R')


def progress_disabled(quiet: bool = False) -> bool:
    return quiet or not sys.stderr.isatty()


def grid_sweep(
    f: Callable[[T], R],
    values: Iterable[T],
    desc: str = "sweep",
    quiet: Optional[bool] = None,
) -> list[tuple[T, R]]:
    """Evaluate ``f`` at every value, in input order, with a progress bar.

    The bar is hidden when ``quiet`` is true or stderr is not a terminal.
    """
    items = list(values)
    disable = progress_disabled(bool(quiet))
    results: list[tuple[T, R]] = []
    for value in tqdm(items, desc=desc, disable=disable, leave=False):
        results.append((value, f(value)))
    return results


def linear_grid(start: float, stop: float, points: int) -> list[float]:
    """``points`` evenly spaced values including both ends."""
    if points < 2:
        raise ValueError(f"a grid needs at least 2 points, got {points}")
    return [float(v) for v in np.linspace(start, stop, points)]
