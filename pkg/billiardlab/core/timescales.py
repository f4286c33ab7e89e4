from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..config.base import PhysicalUnits
from .moments import Packet, spreading_time

# relative to the largest |E| sampled by the stencils
DERIVATIVE_FLOOR = 1e-14


@dataclass(frozen=True)
class TimeScales:
    """Classical, revival and super-revival times; ``math.inf`` marks a vanishing derivative."""
    t_classical: dict[str, float] = field(default_factory=dict)
    t_revival: dict[str, float] = field(default_factory=dict)
    t_super: float = math.inf
    t_spread: float = math.inf

    def rows(self) -> list[tuple[str, str, float]]:
        out = [("classical", k, v) for k, v in self.t_classical.items()]
        out += [("revival", k, v) for k, v in self.t_revival.items()]
        out.append(("super_revival", "", self.t_super))
        out.append(("spreading", "", self.t_spread))
        return out


def _period(hbar: float, derivative: float, floor: float) -> float:
    if abs(derivative) < floor:
        return math.inf
    return 2.0 * math.pi * hbar / abs(derivative)


def time_scales(
    energy_fn: Callable[..., float],
    center: Sequence[int],
    units: PhysicalUnits,
    labels: Optional[Sequence[str]] = None,
    packet: Optional[Packet] = None,
) -> TimeScales:
    """Time scales from central differences of E on the integer lattice.

    ``energy_fn`` receives one integer per quantum number and must be a smooth
    formula (it is evaluated up to two steps away from ``center``, including
    non-physical indices).

    Args:
        energy_fn: E(n1, ..., nd).
        center: Quantum numbers about which to expand.
        units: Unit system; only ħ is used besides the optional spreading time.
        labels: Names for the quantum numbers, default ``n1, n2, ...``.
        packet: When given, ``t_spread`` is its spreading time.
    """
    center = tuple(int(n) for n in center)
    dim = len(center)
    if dim == 0:
        raise ValueError("center needs at least one quantum number")
    labels = list(labels) if labels is not None else [f"n{i + 1}" for i in range(dim)]
    if len(labels) != dim:
        raise ValueError(f"{len(labels)} labels for {dim} quantum numbers")

    cache: dict[tuple[int, ...], float] = {}

    def energy(offset: dict[int, int]) -> float:
        point = tuple(center[i] + offset.get(i, 0) for i in range(dim))
        if point not in cache:
            cache[point] = float(energy_fn(*point))
        return cache[point]

    first, second, third = [], [], []
    for i in range(dim):
        e_m2, e_m1, e_0 = energy({i: -2}), energy({i: -1}), energy({})
        e_p1, e_p2 = energy({i: 1}), energy({i: 2})
        first.append(0.5 * (e_p1 - e_m1))
        second.append(e_p1 - 2.0 * e_0 + e_m1)
        third.append(0.5 * (e_p2 - 2.0 * e_p1 + 2.0 * e_m1 - e_m2))
    mixed = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            mixed[(i, j)] = 0.25 * (
                energy({i: 1, j: 1}) - energy({i: 1, j: -1}) - energy({i: -1, j: 1}) + energy({i: -1, j: -1})
            )

    floor = DERIVATIVE_FLOOR * max(1.0, max(abs(e) for e in cache.values()))
    hbar = units.hbar
    t_classical = {labels[i]: _period(hbar, first[i], floor) for i in range(dim)}
    t_revival = {labels[i]: _period(hbar, second[i] / 2.0, floor) for i in range(dim)}
    for (i, j), value in mixed.items():
        t_revival[f"{labels[i]},{labels[j]}"] = _period(hbar, value, floor)
    t_super = min(_period(hbar, third[i] / 6.0, floor) for i in range(dim))
    t_spread = spreading_time(packet, units) if packet is not None else math.inf
    return TimeScales(t_classical, t_revival, t_super, t_spread)
