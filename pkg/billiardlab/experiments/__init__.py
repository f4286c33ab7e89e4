from .sweep import grid_sweep, linear_grid
from .tables import Column, ResultTable, atomic_write_text

__all__ = ["Column", "ResultTable", "atomic_write_text", "grid_sweep", "linear_grid"]
