"""
Serialization utilities for surfnav artifacts.
Provides JSON support for numpy values, enums and dataclasses.
"""
import dataclasses
from enum import Enum
from pathlib import Path
from typing import Any, Iterable

import numpy as np
import simplejson as json


def serialize_to_json(obj: Any, **kwargs: Any) -> str:
    """
    Serialize any object to JSON, handling numpy types, enums and dataclasses.

    Args:
        obj: The object to serialize
        **kwargs: Extra arguments passed to simplejson.dumps

    Returns:
        JSON string representation
    """
    return json.dumps(obj, default=_json_serializer, **kwargs)


def write_json_lines(path: Path, records: Iterable[Any]) -> int:
    """
    Write one JSON document per line.

    Args:
        path: Destination file
        records: Records to write

    Returns:
        Number of lines written
    """
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for record in records:
            handle.write(serialize_to_json(record, sort_keys=True))
            handle.write("\n")
            count += 1
    return count


def _json_serializer(obj: Any) -> Any:
    """
    Custom serializer for handling types that are not JSON serializable.

    Args:
        obj: Object to serialize

    Returns:
        JSON-serializable representation of the object
    """
    if isinstance(obj, np.ndarray):
        return obj.tolist()

    if isinstance(obj, np.integer):
        return int(obj)

    if isinstance(obj, np.floating):
        return float(obj)

    if isinstance(obj, np.bool_):
        return bool(obj)

    if isinstance(obj, Enum):
        return obj.value

    if isinstance(obj, Path):
        return str(obj)

    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return dataclasses.asdict(obj)

    # Objects with to_dict method
    if hasattr(obj, "to_dict") and callable(getattr(obj, "to_dict")):
        return obj.to_dict()

    raise TypeError(f"Object of type {type(obj)} is not JSON serializable")
