"""Text documents for spaces, families, functional families and reports.

Every document is a single JSON object tagged with ``"format"``.  Floats are
written with Python's shortest round-trip ``repr``, so write-then-read gives
back every value bit for bit.  Infinity, which only occurs as an exponent,
is spelled ``"inf"``.

Layout of a family document::

    {
      "format": "rankin/family",
      "version": 1,
      "dim": 2,
      "atoms": [
        {"label": 0, "weight": 1.0},
        {"label": 1, "weight": 1.0}
      ],
      "vectors": [
        [1.0, 0.0],
        [-1.0, 0.0]
      ]
    }

A functional family adds ``"p"`` and a ``"functionals"`` block shaped like
``"vectors"``.  A space document carries only ``"atoms"``.
"""

from __future__ import annotations

import dataclasses
import json
import math

import numpy as np

from .banach import FunctionalFamily
from .errors import InvalidArgumentError
from .family import VectorFamily
from .measure import MeasureSpace

__all__ = [
    "FormatError",
    "SPACE",
    "FAMILY",
    "FUNCTIONAL_FAMILY",
    "REPORT",
    "space_document",
    "family_document",
    "functional_family_document",
    "dumps",
    "loads",
    "parse_space",
    "parse_family",
    "parse_functional_family",
    "to_jsonable",
]

VERSION = 1
SPACE = "rankin/space"
FAMILY = "rankin/family"
FUNCTIONAL_FAMILY = "rankin/functional-family"
REPORT = "rankin/report"


class FormatError(InvalidArgumentError):
    pass


def _float_out(x):
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        raise FormatError("NaN cannot be serialized")
    return x


def to_jsonable(obj):
    """Recursively turn reports, families and numpy values into JSON data."""
    if isinstance(obj, VectorFamily):
        return family_document(obj)
    if isinstance(obj, FunctionalFamily):
        return functional_family_document(obj)
    if isinstance(obj, MeasureSpace):
        return space_document(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _float_out(obj)
    return obj


def _atoms(space):
    return [{"label": to_jsonable(lab), "weight": _float_out(w)}
            for lab, w in zip(space.labels, space.weights)]


def space_document(space: MeasureSpace) -> dict:
    return {"format": SPACE, "version": VERSION, "atoms": _atoms(space)}


def family_document(fam: VectorFamily) -> dict:
    return {
        "format": FAMILY,
        "version": VERSION,
        "dim": fam.dim,
        "atoms": _atoms(fam.space),
        "vectors": to_jsonable(fam.vectors),
    }


def functional_family_document(fam: FunctionalFamily) -> dict:
    if fam.pairing is not None:
        raise FormatError("families with a custom pairing cannot be serialized")
    return {
        "format": FUNCTIONAL_FAMILY,
        "version": VERSION,
        "p": _float_out(fam.p),
        "dim": fam.dim,
        "atoms": _atoms(fam.space),
        "vectors": to_jsonable(fam.vectors),
        "functionals": to_jsonable(fam.functionals),
    }


def _compact(v):
    return json.dumps(v, allow_nan=False)


def dumps(doc: dict) -> str:
    """Serialize a document: scalars one per line, list items one per line."""
    lines = ["{"]
    items = list(doc.items())
    for n, (k, v) in enumerate(items):
        tail = "," if n < len(items) - 1 else ""
        if isinstance(v, list) and v:
            lines.append(f"  {json.dumps(k)}: [")
            lines.extend(f"    {_compact(x)}{',' if m < len(v) - 1 else ''}"
                         for m, x in enumerate(v))
            lines.append(f"  ]{tail}")
        else:
            lines.append(f"  {json.dumps(k)}: {_compact(v)}{tail}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads(text) -> dict:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"document is not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed document: {exc}") from None
    if not isinstance(doc, dict) or "format" not in doc:
        raise FormatError("document must be an object with a 'format' tag")
    return doc


def _number(x, what):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        if x in ("inf", "-inf"):
            return float(x)
        raise FormatError(f"{what} must be a number, got {x!r}")
    return float(x)


def _get(doc, key):
    try:
        return doc[key]
    except KeyError:
        raise FormatError(f"missing field {key!r}") from None


def _parse_atoms(doc):
    atoms = _get(doc, "atoms")
    if not isinstance(atoms, list):
        raise FormatError("'atoms' must be a list")
    labels, weights = [], []
    for a in atoms:
        if not isinstance(a, dict):
            raise FormatError("each atom must be an object")
        labels.append(_freeze(a.get("label")))
        weights.append(_number(_get(a, "weight"), "atom weight"))
    try:
        return MeasureSpace(weights, labels)
    except InvalidArgumentError as exc:
        raise FormatError(str(exc)) from None


def _freeze(label):
    if isinstance(label, list):
        return tuple(_freeze(x) for x in label)
    return label


def _matrix(doc, key, n, dim):
    rows = _get(doc, key)
    if not isinstance(rows, list) or len(rows) != n:
        raise FormatError(f"'{key}' must hold one row per atom ({n})")
    out = np.empty((n, dim))
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise FormatError(f"row {i} of '{key}' must have {dim} entries")
        out[i] = [_number(x, f"{key} entry") for x in row]
    if not np.all(np.isfinite(out)):
        raise FormatError(f"'{key}' entries must be finite")
    return out


def _dim(doc):
    dim = _get(doc, "dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise FormatError(f"'dim' must be a positive integer, got {dim!r}")
    return dim


def _expect(doc, *formats):
    if doc.get("format") not in formats:
        raise FormatError(f"expected a {' or '.join(formats)} document, got {doc.get('format')!r}")
    if doc.get("version") != VERSION:
        raise FormatError(f"unsupported version {doc.get('version')!r}")


def parse_space(text) -> MeasureSpace:
    """Read a space; family documents are accepted too (their atoms are used)."""
    doc = loads(text)
    _expect(doc, SPACE, FAMILY, FUNCTIONAL_FAMILY)
    return _parse_atoms(doc)


def parse_family(text, mode: str = "raw") -> VectorFamily:
    """Read a family.  The default ``mode="raw"`` keeps the stored values
    untouched, so non-normalized input stays detectable."""
    doc = loads(text)
    _expect(doc, FAMILY)
    space = _parse_atoms(doc)
    X = _matrix(doc, "vectors", space.n_atoms, _dim(doc))
    try:
        return VectorFamily(space, X, mode=mode)
    except InvalidArgumentError as exc:
        raise FormatError(str(exc)) from None


def parse_functional_family(text) -> FunctionalFamily:
    doc = loads(text)
    _expect(doc, FUNCTIONAL_FAMILY)
    space = _parse_atoms(doc)
    dim = _dim(doc)
    p = _number(_get(doc, "p"), "p")
    V = _matrix(doc, "vectors", space.n_atoms, dim)
    F = _matrix(doc, "functionals", space.n_atoms, dim)
    try:
        return FunctionalFamily(space, p, V, F)
    except InvalidArgumentError as exc:
        raise FormatError(str(exc)) from None
