"""JSON file format for coalgebras, Hopf algebras, heaps and Galois pairs.

Scalars are written as canonical strings (``"3"``, ``"-1/2"``, residues over
F_p) so nothing passes through floats. Tensors are sparse lists of index
tuples followed by a coefficient string, sorted by index tuple with zeros
omitted. Counits and units are dense string lists.

A structure record holds ``field``, ``dim``, ``counit``, ``comul`` and
optionally ``basis_labels``, ``mult``/``unit``/``antipode`` (Hopf algebra),
``heap`` and ``grunspan`` (Hopf heap), or ``quotient_of`` (provenance). A
Galois pair file is ``{"type": "galois", "coalgebra": ..., "hopf": ...,
"action": ...}``; the coalgebra keys may also sit at the top level next to
``hopf`` and ``action``.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import Any

import numpy as np

from .coalgebra import Coalgebra
from .galois import GaloisCoObject
from .heap import HopfHeap
from .hopf import HopfAlgebraData
from .report import ShapeError
from .scalars import QQ, FieldSpec

__all__ = [
    "FormatError",
    "field_record",
    "parse_field_record",
    "to_record",
    "from_record",
    "dumps",
    "loads",
    "read_structure",
    "write_structure",
    "write_json_atomic",
    "sparse_entries",
    "parse_sparse",
]


class FormatError(ValueError):
    """Malformed structure file."""


def field_record(f: FieldSpec) -> dict:
    return {"kind": "Rationals"} if f.is_rational else {"kind": "PrimeField", "p": f.p}


def parse_field_record(rec) -> FieldSpec:
    if isinstance(rec, str):
        try:
            return FieldSpec.parse(rec)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    if not isinstance(rec, dict) or "kind" not in rec:
        raise FormatError(f"bad field record {rec!r}")
    try:
        if rec["kind"] == "Rationals":
            return QQ
        if rec["kind"] == "PrimeField":
            p = rec.get("p")
            if not isinstance(p, int) or isinstance(p, bool):
                raise FormatError(f"prime field needs an integer p, got {p!r}")
            return FieldSpec("PrimeField", p)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    raise FormatError(f"unknown field kind {rec['kind']!r}")


def _scalar(f: FieldSpec, text, where: str):
    if not isinstance(text, str):
        raise FormatError(f"{where}: scalar must be a string, got {text!r}")
    try:
        return f.parse_scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"{where}: {exc}") from exc


def sparse_entries(f: FieldSpec, arr) -> list[list]:
    """Nonzero entries as ``[i, j, ..., "coeff"]``, sorted by index tuple."""
    a = np.asarray(arr, dtype=object)
    return [[*map(int, idx), f.format_scalar(a[tuple(idx)])] for idx in np.argwhere(a != 0)]


def parse_sparse(f: FieldSpec, entries, shape: tuple[int, ...], name: str) -> np.ndarray:
    if not isinstance(entries, list):
        raise FormatError(f"{name} must be a list of entries")
    out = f.zeros(*shape)
    seen = set()
    for k, entry in enumerate(entries):
        if not isinstance(entry, list) or len(entry) != len(shape) + 1:
            raise FormatError(f"{name}[{k}]: expected {len(shape)} indices and a coefficient")
        idx = entry[:-1]
        for i, (x, d) in enumerate(zip(idx, shape)):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < d:
                raise FormatError(f"{name}[{k}]: index {x!r} in position {i} out of range [0, {d})")
        key = tuple(idx)
        if key in seen:
            raise FormatError(f"{name}: duplicate entry for index {key}")
        seen.add(key)
        out[key] = _scalar(f, entry[-1], f"{name}[{k}]")
    return out


def _dense(f: FieldSpec, values, n: int, name: str) -> np.ndarray:
    if not isinstance(values, list) or len(values) != n:
        raise FormatError(f"{name} must be a list of {n} scalar strings")
    return np.array([_scalar(f, v, f"{name}[{i}]") for i, v in enumerate(values)], dtype=object)


def _coalgebra_record(c: Coalgebra) -> dict:
    f = c.field
    rec: dict[str, Any] = {"field": field_record(f), "dim": c.dim}
    if c.labels is not None:
        rec["basis_labels"] = list(c.labels)
    rec["counit"] = [f.format_scalar(x) for x in c.counit]
    rec["comul"] = sparse_entries(f, c.comul)
    return rec


def _hopf_record(h: HopfAlgebraData) -> dict:
    f = h.field
    rec = _coalgebra_record(h.coalgebra)
    rec["type"] = "hopf"
    rec["mult"] = sparse_entries(f, h.mult)
    rec["unit"] = [f.format_scalar(x) for x in h.unit]
    if h.antipode is not None:
        rec["antipode"] = sparse_entries(f, h.antipode)
    return rec


def to_record(obj, *, grunspan=None, quotient_of: str | None = None) -> dict:
    """Serialisable record for a Coalgebra, HopfAlgebraData, HopfHeap or GaloisCoObject."""
    if isinstance(obj, GaloisCoObject):
        co = _coalgebra_record(obj.coalgebra)
        co["type"] = "coalgebra"
        return {
            "type": "galois",
            "field": field_record(obj.field),
            "coalgebra": co,
            "hopf": _hopf_record(obj.hopf),
            "action": sparse_entries(obj.field, obj.action),
        }
    if isinstance(obj, HopfHeap):
        rec = _coalgebra_record(obj.coalgebra)
        rec["type"] = "heap"
        rec["heap"] = sparse_entries(obj.field, obj.chi)
        if grunspan is not None:
            rec["grunspan"] = sparse_entries(obj.field, obj.field.array(grunspan))
    elif isinstance(obj, HopfAlgebraData):
        rec = _hopf_record(obj)
    elif isinstance(obj, Coalgebra):
        rec = _coalgebra_record(obj)
        rec["type"] = "coalgebra"
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")
    if quotient_of is not None:
        rec["quotient_of"] = quotient_of
    return rec


def _require(rec: dict, key: str):
    if key not in rec:
        raise FormatError(f"missing key {key!r}")
    return rec[key]


def _read_coalgebra(rec: dict, f: FieldSpec | None = None) -> Coalgebra:
    if not isinstance(rec, dict):
        raise FormatError("structure record must be a JSON object")
    f = parse_field_record(_require(rec, "field")) if f is None else f
    if "field" in rec and parse_field_record(rec["field"]) != f:
        raise FormatError("nested record declares a different field")
    n = _require(rec, "dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError(f"dim must be a positive integer, got {n!r}")
    labels = rec.get("basis_labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise FormatError(f"basis_labels must list {n} names")
    counit = _dense(f, _require(rec, "counit"), n, "counit")
    comul = parse_sparse(f, _require(rec, "comul"), (n, n, n), "comul")
    return Coalgebra(f, comul, counit, tuple(map(str, labels)) if labels is not None else None)


def _read_hopf(rec: dict, f: FieldSpec | None = None) -> HopfAlgebraData:
    c = _read_coalgebra(rec, f)
    f, n = c.field, c.dim
    mult = parse_sparse(f, _require(rec, "mult"), (n, n, n), "mult")
    unit = _dense(f, _require(rec, "unit"), n, "unit")
    antipode = parse_sparse(f, rec["antipode"], (n, n), "antipode") if "antipode" in rec else None
    return HopfAlgebraData(c, mult, unit, antipode)


def record_type(rec: dict) -> str:
    if not isinstance(rec, dict):
        raise FormatError("structure record must be a JSON object")
    if "type" in rec:
        t = rec["type"]
        if t not in ("coalgebra", "hopf", "heap", "galois"):
            raise FormatError(f"unknown structure type {t!r}")
        return t
    if "action" in rec or "hopf" in rec:
        return "galois"
    if "heap" in rec:
        return "heap"
    if "mult" in rec:
        return "hopf"
    return "coalgebra"


def from_record(rec: dict):
    """Inverse of :func:`to_record`. Shape problems surface as :class:`FormatError`."""
    try:
        kind = record_type(rec)
        if kind == "galois":
            co = rec.get("coalgebra", rec)
            c = _read_coalgebra(co, parse_field_record(rec["field"]) if "field" in rec else None)
            h = _read_hopf(_require(rec, "hopf"), c.field)
            action = parse_sparse(c.field, _require(rec, "action"), (c.dim, h.dim, c.dim), "action")
            return GaloisCoObject(c, h, action)
        if kind == "heap":
            c = _read_coalgebra(rec)
            return HopfHeap(c, parse_sparse(c.field, _require(rec, "heap"), (c.dim,) * 4, "heap"))
        if kind == "hopf":
            return _read_hopf(rec)
        return _read_coalgebra(rec)
    except ShapeError as exc:
        raise FormatError(str(exc)) from exc


def read_grunspan(rec: dict, h: HopfHeap) -> np.ndarray | None:
    if "grunspan" not in rec:
        return None
    return parse_sparse(h.field, rec["grunspan"], (h.dim, h.dim), "grunspan")


def _dump(value, indent: int) -> str:
    pad = " " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f'{pad}  {json.dumps(k)}: {_dump(value[k], indent + 2)}' for k in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list) and any(isinstance(v, (list, dict)) for v in value):
        items = [pad + "  " + _dump(v, indent + 2) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(value, ensure_ascii=False)


def dumps(rec: dict) -> str:
    """Deterministic JSON: sorted keys, one sparse entry per line."""
    return _dump(rec, 0) + "\n"


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def read_structure(path: str):
    """Parse a structure file; returns ``(object, raw record)``."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    rec = loads(text)
    return from_record(rec), rec


def write_json_atomic(path: str, rec: dict) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(dumps(rec))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_structure(path: str, obj, **kwargs) -> dict:
    rec = to_record(obj, **kwargs)
    write_json_atomic(path, rec)
    return rec
