from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class ClosedOrbit:
    """A closed classical orbit labelled by its winding numbers (p, q).

    ``launch`` is the launch angle in degrees for polygons and R_min/R for the
    circle. ``recurrences`` lists k·period_over_tau for every repetition k
    inside the enumeration bound. Whispering-gallery limits carry ``p=None``.
    """
    p: Optional[int]
    q: int
    length: float
    period_over_tau: float
    launch: float
    recurrences: tuple[float, ...] = ()
    primitive: bool = True
    limit: bool = False
    special: bool = False

    def __post_init__(self) -> None:
        if not self.length > 0:
            raise ValueError(f"orbit length must be positive, got {self.length}")

    @property
    def label(self) -> str:
        p = "inf" if self.p is None else str(self.p)
        return f"({p},{self.q})"

    def period(self, v0: float) -> float:
        """Traversal time L/v0."""
        return self.length / v0


def repetitions(single: float, bound: float, inclusive: bool = True) -> tuple[float, ...]:
    """k·single for k = 1, 2, ... while within ``bound``."""
    if not single > 0:
        raise ValueError(f"orbit period must be positive, got {single}")
    out = []
    k = 1
    slack = 1e-9 * max(1.0, bound)
    while (k * single <= bound + slack) if inclusive else (k * single < bound - slack):
        out.append(k * single)
        k += 1
    return tuple(out)


def coprime(p: int, q: int) -> bool:
    return math.gcd(p, q) == 1
