"""Structural baseline schema S: types, nesting, required properties, unions.

Values found at the same position are pooled. Basic kinds map to ``type``,
arrays merge their items, and objects merge as long as their properties agree
in shape. Objects whose properties hold differently shaped containers (say an
array of numbers versus an array of arrays) become separate ``anyOf``
branches, as do values of different kinds.
"""

from __future__ import annotations

import json
from decimal import Decimal
from functools import lru_cache
from pathlib import Path

from .encoding import BASIC_KINDS, Subschema, derive_subschema
from .jsoncore import DocumentCollection, kind_of


class SchemaLoadError(ValueError):
    pass


@lru_cache(maxsize=65536)
def _compatible(a: Subschema, b: Subschema) -> bool:
    if a == b:
        return True
    if a.kind in BASIC_KINDS and b.kind in BASIC_KINDS:
        return True
    if a.kind != b.kind:
        return False
    if a.kind == "object":
        left = dict(a.children)
        return all(_compatible(left[k], s) for k, s in b.children if k in left)
    return all(_compatible(x, y) for x in a.children for y in b.children)


class _Extractor:
    def __init__(self):
        self.memo: dict = {}

    def shape(self, value) -> Subschema:
        return derive_subschema(value, None, self.memo)

    def schema_for(self, values: list) -> dict:
        by_kind: dict[str, list] = {}
        for v in values:
            by_kind.setdefault(kind_of(v), []).append(v)
        alternatives = []
        for kind, members in by_kind.items():
            if kind == "object":
                alternatives.extend(self._objects(members))
            elif kind == "array":
                alternatives.append(self._arrays(members))
            else:
                alternatives.append({"type": kind})
        if len(alternatives) == 1:
            return alternatives[0]
        return {"anyOf": alternatives}

    def _arrays(self, arrays: list) -> dict:
        items = [x for arr in arrays for x in arr]
        out: dict = {"type": "array"}
        if items:
            out["items"] = self.schema_for(items)
        return out

    def _objects(self, objects: list) -> list[dict]:
        # greedy first-fit: each variant keeps the shapes seen per label
        variants: list[tuple[dict, list]] = []
        for obj in objects:
            shapes = {k: self.shape(v) for k, v in obj.items()}
            for seen, members in variants:
                if all(
                    all(_compatible(s, t) for t in seen[k])
                    for k, s in shapes.items()
                    if k in seen
                ):
                    for k, s in shapes.items():
                        seen.setdefault(k, set()).add(s)
                    members.append(obj)
                    break
            else:
                variants.append(({k: {s} for k, s in shapes.items()}, [obj]))
        return [self._object_schema(members) for _, members in variants]

    def _object_schema(self, objects: list) -> dict:
        labels: dict[str, list] = {}
        for obj in objects:
            for k, v in obj.items():
                labels.setdefault(k, []).append(v)
        out: dict = {"type": "object"}
        if labels:
            out["properties"] = {k: self.schema_for(vs) for k, vs in labels.items()}
        required = [k for k, vs in labels.items() if len(vs) == len(objects)]
        if required:
            out["required"] = required
        return out


def extract_structural_schema(coll: DocumentCollection) -> dict:
    if not len(coll):
        raise ValueError("cannot extract a schema from an empty collection")
    return _Extractor().schema_for(list(coll.documents))


def load_external_schema(source) -> dict:
    """Load a schema from a path, or from JSON text when given ``str``/``bytes`` content."""
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith(("{", "[", '"'))):
        text = Path(source).read_text(encoding="utf-8")
    elif isinstance(source, (bytes, bytearray)):
        text = source.decode("utf-8")
    else:
        text = source
    try:
        node = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise SchemaLoadError(f"invalid JSON: {exc}") from None
    if not isinstance(node, dict):
        raise SchemaLoadError("schema root must be an object")
    return node
