from __future__ import annotations

from pathlib import Path
from typing import Any, TypeVar, Union

import yaml
from pydantic import BaseModel, ValidationError

from ..errors import ScenarioValidationError
from .scenario import Scenario, WallScanSpec

M = TypeVar("M", bound=BaseModel)


def _field_messages(exc: ValidationError) -> list[str]:
    lines = []
    for err in exc.errors():
        loc = ".".join(str(part) for part in err.get("loc", ())) or "<root>"
        lines.append(f"{loc}: {err.get('msg', 'invalid value')}")
    return lines


def load_model(path_or_dict: Union[str, Path, dict[str, Any]], model: type[M]) -> M:
    """Load and validate ``model`` from a YAML file or a dictionary.

    Args:
        path_or_dict: Path to a ``.yaml``/``.yml`` file, or the parsed mapping.

    Returns:
        The validated model.

    Raises:
        ScenarioValidationError: If the data is not a mapping or fails validation.
        OSError: If the file cannot be read.
    """
    data: Any
    if isinstance(path_or_dict, (str, Path)):
        with open(path_or_dict, "r") as f:
            try:
                data = yaml.safe_load(f)
            except yaml.YAMLError as e:
                raise ScenarioValidationError(message=f"not valid YAML: {e}") from e
    elif isinstance(path_or_dict, dict):
        data = path_or_dict
    else:
        raise TypeError("Input must be a path or dict.")

    if not isinstance(data, dict):
        raise ScenarioValidationError(message="scenario file must contain a mapping")

    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise ScenarioValidationError(_field_messages(e)) from e


def load_scenario(path_or_dict: Union[str, Path, dict[str, Any]]) -> Scenario:
    """Load and validate a :class:`Scenario`; see :func:`load_model`."""
    return load_model(path_or_dict, Scenario)


def load_wall_scan(path_or_dict: Union[str, Path, dict[str, Any]]) -> WallScanSpec:
    return load_model(path_or_dict, WallScanSpec)
