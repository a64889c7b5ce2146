"""
Thermotopo - Report Writers

CSV and JSON output files of the command-line front end.
"""

import json
import sys
import time
from pathlib import Path
from typing import Any, Dict, Optional, TextIO, Union

import numpy as np
import pandas as pd
import structlog

from thermotopo.core.config import settings

logger = structlog.get_logger()

PathLike = Union[str, Path]


def _json_default(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def elapsed_since(started: Optional[float]) -> float:
    """Seconds since started (0 when timing is disabled)."""
    if started is None or not settings.REPORT_ELAPSED:
        return 0.0
    return round(time.perf_counter() - started, 3)


def _open(path: Optional[PathLike]) -> TextIO:
    if path is None or str(path) == "-":
        return sys.stdout
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    return open(target, "w", encoding="utf-8", newline="")


def write_csv(
    frame: pd.DataFrame,
    path: Optional[PathLike],
    started: Optional[float] = None,
    float_format: str = "%.12g",
) -> None:
    """
    Write a table with a header row and a trailing summary comment.

    The last line reads `# rows=<n> elapsed_s=<t>`.
    """
    stream = _open(path)
    try:
        frame.to_csv(stream, index=False, float_format=float_format, lineterminator="\n")
        stream.write(f"# rows={len(frame)} elapsed_s={elapsed_since(started):g}\n")
    finally:
        if stream is not sys.stdout:
            stream.close()

    logger.info("Wrote CSV report", path=str(path or "-"), rows=len(frame))


def write_json(payload: Dict[str, Any], path: Optional[PathLike]) -> None:
    """Write a JSON document with sorted keys."""
    stream = _open(path)
    try:
        json.dump(payload, stream, indent=2, sort_keys=True, default=_json_default)
        stream.write("\n")
    finally:
        if stream is not sys.stdout:
            stream.close()

    logger.info("Wrote JSON report", path=str(path or "-"))
