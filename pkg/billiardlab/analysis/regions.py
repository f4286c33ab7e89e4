from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..core.spectrum import Expansion, SpectralLine


def probability_regions(
    expansion: Expansion, levels: Sequence[float] = (0.68, 0.997)
) -> dict[float, list[tuple[SpectralLine, float]]]:
    """Smallest sets of states holding a given share of the captured probability.

    States are ranked by |a|²; for each level the leading states are taken until
    their cumulative weight reaches ``level`` times Σ|a|².
    """
    for level in levels:
        if not 0.0 < level <= 1.0:
            raise ValueError(f"levels must lie in (0, 1], got {level}")
    probs = expansion.probabilities
    order = np.argsort(-probs, kind="stable")
    cumulative = np.cumsum(probs[order])
    total = expansion.captured_probability
    regions = {}
    for level in levels:
        count = int(np.searchsorted(cumulative, level * total, side="left")) + 1
        count = min(count, order.size)
        regions[level] = [(expansion.lines[i], float(probs[i])) for i in order[:count]]
    return regions
