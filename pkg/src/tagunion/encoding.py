"""Relational encoding of all objects reachable by one labeled path.

Each object becomes a row. For every property label ``l`` seen at the path
there is an attribute ``l.value`` (when ``l`` ever holds a basic value) and
attributes ``l.type@1 .. l.type@k`` holding the subschema derived from the
property's value at increasing levels of detail.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from decimal import Decimal
from functools import lru_cache
from typing import Iterator, NamedTuple

from .jsoncore import DocumentCollection, PathKey, kind_of, objects_at_path

DEFAULT_MAX_DEPTH = 6

BASIC_KINDS = ("null", "boolean", "number", "string")


class Subschema(NamedTuple):
    """Structural schema of a value.

    ``children`` is ``None`` for basic kinds and for containers truncated at
    depth 1. For arrays it is the sorted tuple of distinct item subschemas
    (empty for ``[]``); for objects the tuple of ``(label, subschema)`` pairs
    sorted by label.
    """

    kind: str
    children: tuple | None = None

    def to_schema(self) -> dict:
        return to_schema(self)

    @property
    def text(self) -> str:
        return canonical_text(self)


class Basic(NamedTuple):
    """A basic value as stored in a ``.value`` cell.

    Numbers are held as ``Decimal`` so ``1`` and ``1.0`` land in the same
    cluster, while ``true`` and ``1`` never do.
    """

    kind: str
    value: object

    @property
    def text(self) -> str:
        if self.kind == "number":
            return _number_text(self.value)
        return json.dumps(self.value, ensure_ascii=False)

    def to_json(self):
        return self.value


def _number_text(d: Decimal) -> str:
    if d == d.to_integral_value():
        return str(int(d))
    return format(d.normalize(), "f")


def basic(value) -> Basic:
    kind = kind_of(value)
    if kind not in BASIC_KINDS:
        raise TypeError(f"{kind} is not a basic value")
    if kind == "number" and not isinstance(value, Decimal):
        value = Decimal(value) if isinstance(value, int) else Decimal(repr(value))
    return Basic(kind, value)


# --------------------------------------------------------------------------
# subschema derivation


def derive_subschema(value, depth: int | None, _memo: dict | None = None) -> Subschema:
    """Subschema of ``value`` expanded ``depth`` levels deep (``None``: fully).

    Depth 1 records only the top-level kind; each further level expands one
    more level of array items or object members.
    """
    if depth is not None and depth < 1:
        raise ValueError("depth must be >= 1")
    if _memo is None:
        _memo = {}
    return _derive(value, depth, _memo)


def _derive(value, depth, memo) -> Subschema:
    if isinstance(value, dict):
        if depth == 1:
            return Subschema("object")
        key = (id(value), depth)
        hit = memo.get(key)
        if hit is None:
            nxt = None if depth is None else depth - 1
            hit = Subschema(
                "object",
                tuple(sorted((k, _derive(v, nxt, memo)) for k, v in value.items())),
            )
            memo[key] = hit
        return hit
    if isinstance(value, list):
        if depth == 1:
            return Subschema("array")
        key = (id(value), depth)
        hit = memo.get(key)
        if hit is None:
            nxt = None if depth is None else depth - 1
            hit = Subschema("array", _union(_derive(v, nxt, memo) for v in value))
            memo[key] = hit
        return hit
    return _BASIC_SCHEMAS[kind_of(value)]


_BASIC_SCHEMAS = {k: Subschema(k) for k in BASIC_KINDS}


def _union(schemas) -> tuple:
    distinct = set(schemas)
    if len(distinct) <= 1:
        return tuple(distinct)
    return tuple(sorted(distinct, key=canonical_text))


def truncate(schema: Subschema, depth: int) -> Subschema:
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if schema.children is None:
        return schema
    if depth == 1:
        return Subschema(schema.kind)
    if schema.kind == "array":
        return Subschema("array", _union(truncate(s, depth - 1) for s in schema.children))
    return Subschema(
        "object", tuple((k, truncate(s, depth - 1)) for k, s in schema.children)
    )


def schema_depth(schema: Subschema) -> int:
    """Smallest depth at which derivation stops changing."""
    if not schema.children:
        return 1 if schema.children is None else 2
    inner = schema.children if schema.kind == "array" else [s for _, s in schema.children]
    return 1 + max(schema_depth(s) for s in inner)


def to_schema(schema: Subschema) -> dict:
    """Render as a JSON Schema using ``type``, ``items`` and ``properties``."""
    out: dict = {"type": schema.kind}
    if schema.children is None:
        return out
    if schema.kind == "array":
        items = schema.children
        if not items:
            out["items"] = False
        elif len(items) == 1:
            out["items"] = to_schema(items[0])
        else:
            out["items"] = {"anyOf": [to_schema(s) for s in items]}
    else:
        out["properties"] = {k: to_schema(s) for k, s in schema.children}
    return out


def from_schema(node) -> Subschema:
    """Inverse of :func:`to_schema`."""
    if not isinstance(node, dict) or "type" not in node:
        raise ValueError(f"not a rendered subschema: {node!r}")
    kind = node["type"]
    if kind in BASIC_KINDS:
        return _BASIC_SCHEMAS[kind]
    if kind == "array":
        if "items" not in node:
            return Subschema("array")
        items = node["items"]
        if items is False:
            return Subschema("array", ())
        if "anyOf" in items:
            return Subschema("array", _union(from_schema(s) for s in items["anyOf"]))
        return Subschema("array", (from_schema(items),))
    if kind == "object":
        if "properties" not in node:
            return Subschema("object")
        return Subschema(
            "object",
            tuple(sorted((k, from_schema(v)) for k, v in node["properties"].items())),
        )
    raise ValueError(f"unknown kind {kind!r}")


@lru_cache(maxsize=65536)
def canonical_text(schema: Subschema) -> str:
    return json.dumps(to_schema(schema), sort_keys=True, separators=(",", ":"))


# --------------------------------------------------------------------------
# relations


class AttributeId(NamedTuple):
    role: str  # "id" | "value" | "type"
    label: str = ""
    depth: int = 0

    def __str__(self):
        if self.role == "id":
            return "O.id"
        if self.role == "value":
            return f"{self.label}.value"
        return f"{self.label}.type@{self.depth}"


OBJECT_ID = AttributeId("id")


def value_attr(label: str) -> AttributeId:
    return AttributeId("value", label)


def type_attr(label: str, depth: int) -> AttributeId:
    if depth < 1:
        raise ValueError("depth must be >= 1")
    return AttributeId("type", label, depth)


@dataclass
class ObjectRelation:
    """Column-stored relation; ``None`` marks a missing cell."""

    path: PathKey
    attributes: list
    columns: dict
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        lengths = {len(self.columns[a]) for a in self.attributes}
        if len(lengths) > 1:
            raise ValueError("columns differ in length")
        if set(self.columns) != set(self.attributes):
            raise ValueError("columns do not match attributes")
        if OBJECT_ID in self.columns:
            ids = self.columns[OBJECT_ID]
            if len(set(ids)) != len(ids):
                raise ValueError("object identifiers must be unique")

    def __len__(self):
        if not self.attributes:
            return 0
        return len(self.columns[self.attributes[0]])

    def rows(self) -> Iterator[dict]:
        for i in range(len(self)):
            yield {a: self.columns[a][i] for a in self.attributes}

    def labels(self) -> list[str]:
        seen: dict[str, None] = {}
        for a in self.attributes:
            if a.role != "id":
                seen.setdefault(a.label, None)
        return list(seen)

    @property
    def value_attributes(self) -> list:
        return [a for a in self.attributes if a.role == "value"]

    @property
    def type_attributes(self) -> list:
        return [a for a in self.attributes if a.role == "type"]

    @classmethod
    def from_rows(cls, path, attributes, rows, max_depth=DEFAULT_MAX_DEPTH):
        columns = {a: [r.get(a) for r in rows] for a in attributes}
        return cls(path, list(attributes), columns, max_depth)


def encode_relation(
    coll: DocumentCollection,
    path: PathKey,
    k: int = DEFAULT_MAX_DEPTH,
    _memo: dict | None = None,
) -> ObjectRelation:
    if k < 1:
        raise ValueError("k must be >= 1")
    memo = {} if _memo is None else _memo
    objs = objects_at_path(coll, path)
    labels: dict[str, bool] = {}  # label -> has a basic occurrence
    for _, obj in objs:
        for label, v in obj.items():
            is_basic = not isinstance(v, (dict, list))
            labels[label] = labels.get(label, False) or is_basic

    attributes = [OBJECT_ID]
    for label, has_basic in labels.items():
        if has_basic:
            attributes.append(value_attr(label))
        attributes.extend(type_attr(label, d) for d in range(1, k + 1))

    columns: dict = {a: [] for a in attributes}
    columns[OBJECT_ID] = [oid for oid, _ in objs]
    for label, has_basic in labels.items():
        vcol = columns[value_attr(label)] if has_basic else None
        tcols = [columns[type_attr(label, d)] for d in range(1, k + 1)]
        for _, obj in objs:
            if label not in obj:
                if vcol is not None:
                    vcol.append(None)
                for col in tcols:
                    col.append(None)
                continue
            v = obj[label]
            if vcol is not None:
                vcol.append(None if isinstance(v, (dict, list)) else basic(v))
            for d, col in enumerate(tcols, start=1):
                col.append(_derive(v, d, memo))
    return ObjectRelation(path, attributes, columns, k)


def cell_text(cell) -> str:
    if cell is None:
        return ""
    if isinstance(cell, tuple) and len(cell) == 2 and isinstance(cell[0], int):
        return f"{cell[0]}:{cell[1]}"
    return cell.text


def write_relation_csv(rel: ObjectRelation, fp) -> None:
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow([str(a) for a in rel.attributes])
    for row in rel.rows():
        writer.writerow([cell_text(row[a]) for a in rel.attributes])
