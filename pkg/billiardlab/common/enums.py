from enum import Enum

__all__ = [
    "Geometry",
    "Parity",
    "OverlapKind",
]


class Geometry(str, Enum):
    WELL1D = "well1d"
    RECT = "rect"
    SQUARE = "square"
    ISOCELES45 = "isoceles45"
    TRIANGLE = "triangle"
    TRI306090 = "tri306090"
    CIRCLE = "circle"
    HALFCIRCLE = "halfcircle"


class Parity(str, Enum):
    """Symmetry label of a degenerate-pair combination."""
    MINUS = "minus"
    PLUS = "plus"
    ZERO = "zero"
    NONE = ""


class OverlapKind(str, Enum):
    COS = "cos"
    SIN = "sin"
