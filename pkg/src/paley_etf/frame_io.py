"""JSON frame files.

Layout (``format_version`` 1)::

    {"format_version": 1, "n": 7, "d": 4, "construction": "paley-upper",
     "field": {"p": 7, "m": 1, "modulus": [0, 1]},
     "parameters": {},
     "vectors": [[[re, im], ...d entries], ...n vectors]}

``field`` is omitted when no finite field was involved. Floats are written
with ``repr``, which is the shortest string that parses back to the same
double, so write -> read -> write is byte-identical.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import FrameFormatError
from .frames import CONSTRUCTIONS, Frame

FORMAT_VERSION = 1
_PARAM_KEYS = ("dropped_index", "character_c", "conference_k")


def dumps_frame(frame: Frame) -> str:
    header = {
        "format_version": FORMAT_VERSION,
        "n": frame.n,
        "d": frame.d,
        "construction": frame.construction,
    }
    if frame.field is not None:
        header["field"] = {k: frame.field[k] for k in ("p", "m", "modulus")}
    header["parameters"] = {k: frame.parameters[k] for k in _PARAM_KEYS if k in frame.parameters}
    lines = [json.dumps(header)[:-1] + ', "vectors": [']
    T = frame.synthesis
    for k in range(frame.n):
        col = [[float(z.real), float(z.imag)] for z in T[:, k]]
        sep = "," if k < frame.n - 1 else ""
        lines.append("  " + json.dumps(col) + sep)
    lines.append("]}")
    return "\n".join(lines) + "\n"


def write_frame(frame: Frame, path) -> None:
    Path(path).write_text(dumps_frame(frame))


def _int(data: dict, key: str) -> int:
    v = data.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise FrameFormatError(f"{key!r} must be an integer")
    return v


def loads_frame(text: str) -> Frame:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FrameFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FrameFormatError("top level must be an object")
    if data.get("format_version") != FORMAT_VERSION:
        raise FrameFormatError(f"unsupported format_version {data.get('format_version')!r}")
    n, d = _int(data, "n"), _int(data, "d")
    if not 1 <= d <= n:
        raise FrameFormatError(f"invalid dimensions n={n}, d={d}")
    construction = data.get("construction")
    if construction not in CONSTRUCTIONS and construction != "custom":
        raise FrameFormatError(f"unknown construction {construction!r}")
    fld = data.get("field")
    if fld is not None:
        if not isinstance(fld, dict) or set(fld) != {"p", "m", "modulus"}:
            raise FrameFormatError("field must be an object with keys p, m, modulus")
        _int(fld, "p"), _int(fld, "m")
        if not isinstance(fld["modulus"], list) or not all(
                isinstance(c, int) for c in fld["modulus"]):
            raise FrameFormatError("field modulus must be a list of integers")
    params = data.get("parameters", {})
    if not isinstance(params, dict) or not set(params) <= set(_PARAM_KEYS):
        raise FrameFormatError("parameters must be an object with known keys")
    vectors = data.get("vectors")
    try:
        arr = np.array(vectors, dtype=np.float64)
    except (TypeError, ValueError):
        raise FrameFormatError("vectors must be an n x d x 2 array of numbers") from None
    if arr.shape != (n, d, 2):
        raise FrameFormatError(f"vectors have shape {arr.shape}, expected {(n, d, 2)}")
    if not np.all(np.isfinite(arr)):
        raise FrameFormatError("vectors contain non-finite values")
    if any(isinstance(x, bool) for col in vectors for pair in col for x in pair):
        raise FrameFormatError("vector entries must be numbers")
    T = (arr[..., 0] + 1j * arr[..., 1]).T
    return Frame(T, construction=construction, field=fld, parameters=params)


def read_frame(path) -> Frame:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FrameFormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads_frame(text)


def format_float(x: float) -> str:
    return repr(float(x)) if math.isfinite(x) else str(x)
