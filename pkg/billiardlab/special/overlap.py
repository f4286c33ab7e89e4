from __future__ import annotations

import math
from typing import Union

import numpy as np

from ..common.enums import OverlapKind


def gaussian_trig_overlap(
    kind: Union[OverlapKind, str],
    kappa: Union[float, np.ndarray],
    x0: float,
    p0: float,
    b: float,
    hbar: float = 1.0,
) -> Union[complex, np.ndarray]:
    """Closed form of ∫ exp(ip0(x-x0)/ħ)·exp(-(x-x0)²/2b²)·trig(κx) dx over the real line.

    Args:
        kind: ``"cos"`` or ``"sin"``.
        kappa: Wavenumber κ (scalar or array).
        x0: Packet centre.
        p0: Packet momentum.
        b: Width parameter, must be positive.
        hbar: Reduced Planck constant.

    Returns:
        Complex value, or a complex array matching ``kappa``.
    """
    kind = OverlapKind(kind)
    if not b > 0:
        raise ValueError(f"b must be positive, got {b}")
    k = np.asarray(kappa, dtype=float)
    q = p0 / hbar
    prefactor = b * math.sqrt(2.0 * math.pi) / 2.0
    forward = np.exp(1j * k * x0) * np.exp(-0.5 * b * b * (k + q) ** 2)
    backward = np.exp(-1j * k * x0) * np.exp(-0.5 * b * b * (q - k) ** 2)
    if kind is OverlapKind.COS:
        value = prefactor * (forward + backward)
    else:
        value = prefactor * (forward - backward) / 1j
    if value.ndim == 0:
        return complex(value)
    return value
