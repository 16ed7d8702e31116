"""JSON documents: parsing input files, emitting them back, and report envelopes.

An input document looks like::

    {"schema": "skewrank/1", "dim": 6, "field": "q",
     "generators": [[[0, 1, ...], ...], {"0,4": "1", "1,3": "-1"}],
     "metadata": {}}

Each generator is either a full skew matrix or a sparse map from "i,j"
(i < j) to a coefficient.  Scalars may be JSON integers or strings such as
"3/4", "1+sqrt(2)" or "5" (read in the declared field).  Matrices must be
skew-symmetric as given; nothing is symmetrized silently.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dc_field

from .errors import BadField, NotSkew, ParseError
from .exterior import SkewTensor
from .fields import format_scalar, parse_field
from .rank import MatrixSubspace

SCHEMA = "skewrank/1"

__all__ = [
    "SCHEMA",
    "InputDocument",
    "parse_input",
    "emit_document",
    "document_for",
    "input_hash",
    "report_envelope",
    "dumps",
]


@dataclass
class InputDocument:
    dim: int
    field: object
    generators: list  # SkewTensor
    metadata: dict = dc_field(default_factory=dict)

    def space(self) -> MatrixSubspace:
        return MatrixSubspace(tuple(self.generators))


def _scalar(F, raw, path):
    if isinstance(raw, bool) or raw is None:
        raise ParseError(f"{path}: expected a scalar, got {raw!r}")
    if isinstance(raw, int):
        return F(raw)
    if isinstance(raw, float):
        raise ParseError(f"{path}: floating point entry {raw!r}; write it as an exact string")
    if isinstance(raw, str):
        try:
            return F.parse(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{path}: cannot parse {raw!r}") from exc
    raise ParseError(f"{path}: expected a scalar, got {type(raw).__name__}")


def _matrix_generator(F, dim, raw, path):
    if len(raw) != dim or any(not isinstance(r, list) or len(r) != dim for r in raw):
        raise ParseError(f"{path}: expected a {dim}x{dim} matrix")
    m = [[_scalar(F, x, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(raw)]
    for i in range(dim):
        if m[i][i]:
            raise NotSkew(f"{path}[{i}][{i}] is nonzero", path=f"{path}[{i}][{i}]")
        for j in range(i + 1, dim):
            if m[j][i] != -m[i][j]:
                where = f"{path}[{j}][{i}]"
                raise NotSkew(f"{where} is not minus {path}[{i}][{j}]", path=where)
    return SkewTensor.from_matrix(m)


def _pair_key(key, dim, path):
    parts = key.replace("^", ",").split(",")
    try:
        i, j = (int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"{path}: bad coordinate key {key!r}; use 'i,j'") from exc
    if not (0 <= i < j < dim):
        raise ParseError(f"{path}: coordinate {key!r} needs 0 <= i < j < {dim}")
    return i, j


def _map_generator(F, dim, raw, path):
    coords = {}
    for key, val in raw.items():
        i, j = _pair_key(key, dim, f"{path}.{key}")
        coords[(i, j)] = coords.get((i, j), F.zero) + _scalar(F, val, f"{path}.{key}")
    return SkewTensor.from_dict(dim, coords, F)


def parse_input(data, field=None) -> InputDocument:
    """Validate a JSON input document.  ``field`` overrides the declared one."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not UTF-8") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise ParseError(f"unsupported schema {schema!r}")
    if field is None:
        spec = doc.get("field", "q")
        if not isinstance(spec, str):
            raise BadField(f"field must be a string, got {spec!r}")
        field = parse_field(spec)
    dim = doc.get("dim")
    if dim not in (5, 6):
        raise ParseError(f"dim must be 5 or 6, got {dim!r}")
    gens_raw = doc.get("generators")
    if not isinstance(gens_raw, list) or not 1 <= len(gens_raw) <= 4:
        raise ParseError("generators must be a list of 1 to 4 entries")
    gens = []
    for n, g in enumerate(gens_raw):
        path = f"generators[{n}]"
        if isinstance(g, list):
            gens.append(_matrix_generator(field, dim, g, path))
        elif isinstance(g, dict):
            gens.append(_map_generator(field, dim, g, path))
        else:
            raise ParseError(f"{path}: expected a matrix or a coordinate map")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError("metadata must be an object")
    return InputDocument(dim, field, gens, metadata)


def emit_document(doc: InputDocument) -> dict:
    return {
        "schema": SCHEMA,
        "dim": doc.dim,
        "field": doc.field.descriptor(),
        "generators": [[[format_scalar(x) for x in row] for row in g.matrix()] for g in doc.generators],
        "metadata": doc.metadata,
    }


def document_for(space: MatrixSubspace, metadata=None) -> InputDocument:
    return InputDocument(space.dim_v, space.field, list(space.generators), dict(metadata or {}))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def input_hash(doc: InputDocument) -> str:
    canon = json.dumps(emit_document(doc), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canon.encode()).hexdigest()


def report_envelope(command: str, doc: InputDocument | None, result: dict, seconds: float) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "input_hash": None if doc is None else input_hash(doc),
        "result": result,
        "timing": {"seconds": round(seconds, 6)},
    }
