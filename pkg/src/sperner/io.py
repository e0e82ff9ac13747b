"""Reading and writing partition systems as JSON.

Format: ``{"n": int, "k": int, "partitions": [[[int, ...], ...], ...]}`` with
0-based elements.
"""

from __future__ import annotations

import json
from pathlib import Path

from .construct.system import PartitionSystem


class SystemFileError(ValueError):
    """Malformed system file; the message carries a line or JSON path."""


def _expect_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SystemFileError(f"{path}: expected an integer, got {json.dumps(value)}")
    return value


def parse_system(text: str, source: str = "<string>") -> PartitionSystem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemFileError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise SystemFileError(f"{source}: top level must be an object")
    for key in ("n", "k", "partitions"):
        if key not in data:
            raise SystemFileError(f"{source}: missing key {key!r}")
    n = _expect_int(data["n"], f"{source}: $.n")
    k = _expect_int(data["k"], f"{source}: $.k")
    parts = data["partitions"]
    if not isinstance(parts, list):
        raise SystemFileError(f"{source}: $.partitions must be a list")
    clean = []
    for i, part in enumerate(parts):
        if not isinstance(part, list):
            raise SystemFileError(f"{source}: $.partitions[{i}] must be a list of classes")
        row = []
        for a, cls in enumerate(part):
            where = f"{source}: $.partitions[{i}][{a}]"
            if not isinstance(cls, list):
                raise SystemFileError(f"{where} must be a list of elements")
            elems = [_expect_int(x, f"{where}[{e}]") for e, x in enumerate(cls)]
            if len(set(elems)) != len(elems):
                raise SystemFileError(f"{where} repeats an element")
            row.append(elems)
        clean.append(row)
    try:
        return PartitionSystem(n, k, clean)
    except ValueError as exc:
        raise SystemFileError(f"{source}: {exc}") from None


def load_system(path) -> PartitionSystem:
    path = Path(path)
    return parse_system(path.read_text(encoding="utf-8"), str(path))


def dump_system(system: PartitionSystem) -> str:
    lines = [json.dumps(part, separators=(",", ":")) for part in system.to_lists()]
    body = ",\n    ".join(lines)
    return f'{{\n  "n": {system.n},\n  "k": {system.k},\n  "partitions": [\n    {body}\n  ]\n}}\n'


def save_system(system: PartitionSystem, path) -> None:
    Path(path).write_text(dump_system(system), encoding="utf-8")
