import warnings


class UnsupportedOrderError(ValueError):
    """Raised when a Bessel order lies outside the supported range."""

    def __init__(self, order=None, max_order=None, message=""):
        self.order = order
        self.max_order = max_order
        self.message = message
        full_message = f"Unsupported Bessel order {order}"
        if max_order is not None:
            full_message += f"; supported orders are 0..{max_order}"
        full_message += f". {message}"
        super().__init__(full_message)


class RootIsolationError(Exception):
    """Raised when a zero cannot be bracketed or refined to tolerance."""

    def __init__(self, order=None, index=None, bracket=None, message=""):
        self.order = order
        self.index = index
        self.bracket = bracket
        self.message = message
        full_message = f"Could not isolate zero n_r={index} of J_{order}"
        if bracket is not None:
            full_message += f" in bracket [{bracket[0]:.12g}, {bracket[1]:.12g}]"
        full_message += f". {message}"
        super().__init__(full_message)


class QuantumNumberError(ValueError):
    """Raised for quantum numbers outside their allowed set."""

    def __init__(self, parameter=None, value=None, valid_range=None, message=""):
        self.parameter = parameter
        self.value = value
        self.valid_range = valid_range
        self.message = message
        full_message = "Invalid quantum number"
        if parameter:
            full_message += f" '{parameter}'"
        if value is not None:
            full_message += f": received {value!r}"
        if valid_range:
            full_message += f", expected {valid_range}"
        full_message += f". {message}"
        super().__init__(full_message)


class AccuracyError(ArithmeticError):
    """Raised when a quadrature or solver does not reach the requested accuracy."""

    def __init__(self, quantity=None, achieved=None, requested=None, message=""):
        self.quantity = quantity
        self.achieved = achieved
        self.requested = requested
        self.message = message
        full_message = "Requested accuracy not reached"
        if quantity:
            full_message += f" for {quantity}"
        if achieved is not None:
            full_message += f": error estimate {achieved:.3e}"
        if requested is not None:
            full_message += f" > tolerance {requested:.3e}"
        full_message += f". {message}"
        super().__init__(full_message)


class NumericalError(ArithmeticError):
    """Raised when an integrand or series produces non-finite values."""

    def __init__(self, message="A non-finite value was produced."):
        self.message = message
        super().__init__(self.message)


class EmptyExpansionError(ValueError):
    """Raised when an operation needs at least one spectral term."""

    def __init__(self, message="The expansion has no terms."):
        self.message = message
        super().__init__(self.message)


class NormalizationError(ValueError):
    """Raised when an expansion captures more probability than the packet holds."""

    def __init__(self, captured=None, message=""):
        self.captured = captured
        self.message = message
        full_message = "Expansion over-normalized"
        if captured is not None:
            full_message += f": captured probability {captured:.12g} > 1"
        full_message += f". {message}"
        super().__init__(full_message)


class BasisMismatchError(Exception):
    """Raised when an eigenfunction evaluator belongs to another geometry."""

    def __init__(self, expected=None, actual=None):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Basis evaluator for '{actual}' cannot evaluate '{expected}' lines.")


class FoldUnsupportedError(ValueError):
    """Raised when a fold is requested for a geometry that lacks the symmetry."""

    def __init__(self, geometry=None, message=""):
        self.geometry = geometry
        self.message = message
        super().__init__(f"Cannot fold geometry '{geometry}'. {message}")


class OutsideDomainError(ValueError):
    """Raised when an eigenfunction is evaluated outside its billiard."""

    def __init__(self, point=None, message=""):
        self.point = point
        self.message = message
        super().__init__(f"Point {point} lies outside the billiard. {message}")


class InvalidEnergyError(ValueError):
    """Raised for energies below the classically allowed floor."""

    def __init__(self, energy=None, floor=None, message=""):
        self.energy = energy
        self.floor = floor
        self.message = message
        full_message = f"Energy {energy}"
        if floor is not None:
            full_message += f" is below the floor {floor}"
        full_message += f". {message}"
        super().__init__(full_message)


class UnboundEnergyError(ValueError):
    """Raised when motion at the given energy is not confined."""

    def __init__(self, energy=None, side=None):
        self.energy = energy
        self.side = side
        super().__init__(f"No {side} turning point found at energy {energy}.")


class WKBSolverError(Exception):
    """Raised when the action integral cannot be inverted."""

    def __init__(self, level=None, message=""):
        self.level = level
        self.message = message
        super().__init__(f"WKB quantization failed for level n={level}. {message}")


class SpectrumIndexError(IndexError):
    """Raised when a finite difference needs neighbours outside the list."""

    def __init__(self, index=None, size=None):
        self.index = index
        self.size = size
        super().__init__(f"Index {index} has no neighbours in a spectrum of {size} levels.")


class ScenarioValidationError(ValueError):
    """Raised for invalid scenario files; ``errors`` holds one line per field."""

    def __init__(self, errors=None, message=""):
        self.errors = list(errors or [])
        self.message = message
        full_message = "Scenario is invalid"
        if message:
            full_message += f": {message}"
        if self.errors:
            full_message += "\n  " + "\n  ".join(self.errors)
        super().__init__(full_message)


class WallProximityWarning(UserWarning):
    """Packet sits close enough to a wall that closed forms lose accuracy."""
    pass


def warn_wall_proximity(message: str, logger=None) -> None:
    warnings.warn(message, WallProximityWarning, stacklevel=3)
    if logger is not None:
        logger.warning(message)
