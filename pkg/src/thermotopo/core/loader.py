"""
Thermotopo - Configuration Loader

Loads JSON (or YAML) command configurations and validates them against the
pydantic schemas, reporting every problem with the source line of the key.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Type, TypeVar

import structlog
import yaml
from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from thermotopo.core.exceptions import ConfigurationError
from thermotopo.core.schemas import ConfigValidation

logger = structlog.get_logger()

SchemaT = TypeVar("SchemaT", bound=BaseModel)

LinePath = Tuple[Any, ...]


def _key_lines(text: str) -> Dict[LinePath, int]:
    """Map key paths of a YAML/JSON document to 1-based line numbers."""
    lines: Dict[LinePath, int] = {}
    try:
        root = yaml.compose(text)
    except yaml.YAMLError:
        return lines

    def walk(node: Any, path: LinePath) -> None:
        if isinstance(node, yaml.MappingNode):
            for key_node, value_node in node.value:
                child = path + (key_node.value,)
                lines[child] = key_node.start_mark.line + 1
                walk(value_node, child)
        elif isinstance(node, yaml.SequenceNode):
            for index, item in enumerate(node.value):
                child = path + (index,)
                lines[child] = item.start_mark.line + 1
                walk(item, child)

    if root is not None:
        walk(root, ())
    return lines


def _line_for(loc: LinePath, lines: Dict[LinePath, int]) -> Optional[int]:
    for end in range(len(loc), 0, -1):
        if loc[:end] in lines:
            return lines[loc[:end]]
    return None


def config_errors(
    error: PydanticValidationError,
    lines: Optional[Dict[LinePath, int]] = None,
) -> List[Dict[str, Any]]:
    """Flatten a pydantic validation error into located error entries."""
    errors: List[Dict[str, Any]] = []
    for err in error.errors():
        loc = tuple(err.get("loc", ()))
        errors.append({
            "type": err.get("type", "value_error"),
            "location": ".".join(str(part) for part in loc) or "<root>",
            "line": _line_for(loc, lines) if lines else None,
            "message": err.get("msg", "invalid value"),
        })
    return errors


def validate_config(
    text: str,
    schema: Type[BaseModel],
    overrides: Optional[Dict[str, Any]] = None,
) -> Tuple[ConfigValidation, Optional[BaseModel]]:
    """
    Validate a configuration document against a schema.

    Args:
        text: JSON or YAML source
        schema: Pydantic model class to validate against
        overrides: Top-level keys that replace document values (CLI flags)

    Returns:
        The validation report and, when valid, the parsed configuration
    """
    try:
        data = yaml.safe_load(text) if text.strip() else {}
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        return (
            ConfigValidation(
                valid=False,
                errors=[{
                    "type": "parse_error",
                    "message": f"Invalid document: {e}",
                    "line": mark.line + 1 if mark is not None else None,
                }],
            ),
            None,
        )

    if not isinstance(data, dict):
        return (
            ConfigValidation(
                valid=False,
                errors=[{"type": "structure_error", "message": "Configuration must be an object", "line": 1}],
            ),
            None,
        )

    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value

    lines = _key_lines(text)
    try:
        config = schema.model_validate(data)
    except PydanticValidationError as e:
        return ConfigValidation(valid=False, errors=config_errors(e, lines)), None

    warnings: List[Dict[str, Any]] = []
    for name in ("grid", "output"):
        if name in schema.model_fields and name not in data:
            warnings.append({"type": "default_applied", "message": f"No '{name}' given, using default"})

    return ConfigValidation(valid=True, warnings=warnings), config


def load_config(
    path: Path,
    schema: Type[SchemaT],
    overrides: Optional[Dict[str, Any]] = None,
) -> SchemaT:
    """Load and validate a configuration file, raising ConfigurationError on problems."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"Cannot read configuration {path}: {e}")

    report, config = validate_config(text, schema, overrides=overrides)
    for warning in report.warnings:
        logger.debug("Configuration warning", path=str(path), **warning)

    if not report.valid or config is None:
        summary = "; ".join(
            f"line {err.get('line') or '?'}: {err.get('location', '')} {err['message']}".strip()
            for err in report.errors
        )
        raise ConfigurationError(f"Invalid configuration {path}: {summary}", errors=report.errors)

    return config  # type: ignore[return-value]
