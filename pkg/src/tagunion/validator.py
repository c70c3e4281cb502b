"""Draft-07 validation for the keyword subset used by extracted schemas.

Supported: boolean schemas, ``type``, ``properties``, ``items`` (a single
schema), ``required``, ``const``, ``enum``, ``allOf``, ``anyOf`` and
``if``/``then``/``else``. Annotations are ignored; any other keyword is
ignored with an :class:`UnsupportedKeywordWarning`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from decimal import Decimal
from typing import NamedTuple

TYPE_NAMES = ("null", "boolean", "object", "array", "number", "string", "integer")
ANNOTATIONS = frozenset(
    {"$schema", "$id", "$comment", "title", "description", "default", "examples",
     "definitions", "readOnly", "writeOnly"}
)
SUPPORTED = frozenset(
    {"type", "properties", "items", "required", "const", "enum", "allOf", "anyOf",
     "if", "then", "else"}
)


class SchemaError(ValueError):
    """The schema itself is malformed (as opposed to the instance being invalid)."""


class UnsupportedKeywordWarning(UserWarning):
    pass


class ValidationError(NamedTuple):
    path: str
    keyword: str
    message: str


@dataclass
class ValidationResult:
    errors: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.errors

    def __bool__(self):
        return self.valid


def _is_number(x) -> bool:
    return isinstance(x, (int, float, Decimal)) and not isinstance(x, bool)


def _has_type(instance, name: str) -> bool:
    if name == "null":
        return instance is None
    if name == "boolean":
        return isinstance(instance, bool)
    if name == "object":
        return isinstance(instance, dict)
    if name == "array":
        return isinstance(instance, list)
    if name == "string":
        return isinstance(instance, str)
    if name == "number":
        return _is_number(instance)
    # integer: any number with a zero fractional part
    if not _is_number(instance):
        return False
    if isinstance(instance, float):
        return instance.is_integer()
    if isinstance(instance, Decimal):
        return instance.is_finite() and instance == instance.to_integral_value()
    return True


def json_equal(a, b) -> bool:
    if isinstance(a, bool) or isinstance(b, bool):
        return isinstance(a, bool) and isinstance(b, bool) and a == b
    if _is_number(a) and _is_number(b):
        return a == b
    if isinstance(a, dict) and isinstance(b, dict):
        return a.keys() == b.keys() and all(json_equal(a[k], b[k]) for k in a)
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(json_equal(x, y) for x, y in zip(a, b))
    if type(a) is not type(b) and not (isinstance(a, str) and isinstance(b, str)):
        return False
    return a == b


def _pointer(parts) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in parts)


def _describe(x) -> str:
    for name in ("null", "boolean", "object", "array", "string", "number"):
        if _has_type(x, name):
            return name
    return type(x).__name__


class _Validator:
    def __init__(self):
        self.warned: set = set()

    def check(self, instance, schema, path: list, errors: list) -> None:
        if schema is True:
            return
        if schema is False:
            errors.append(ValidationError(_pointer(path), "false", "no value is allowed"))
            return
        if not isinstance(schema, dict):
            raise SchemaError(f"schema must be an object or boolean, got {schema!r}")

        for kw in schema:
            if kw not in SUPPORTED and kw not in ANNOTATIONS and kw not in self.warned:
                self.warned.add(kw)
                warnings.warn(f"keyword {kw!r} is not supported and was ignored",
                              UnsupportedKeywordWarning, stacklevel=4)

        where = _pointer(path)
        if "type" in schema:
            names = schema["type"]
            if isinstance(names, str):
                names = [names]
            if not isinstance(names, list) or not names or any(n not in TYPE_NAMES for n in names):
                raise SchemaError(f"invalid type {schema['type']!r}")
            if not any(_has_type(instance, n) for n in names):
                errors.append(ValidationError(
                    where, "type", f"{_describe(instance)} is not of type {' or '.join(names)}"))

        if "const" in schema and not json_equal(instance, schema["const"]):
            errors.append(ValidationError(where, "const", f"expected {schema['const']!r}"))

        if "enum" in schema:
            options = schema["enum"]
            if not isinstance(options, list):
                raise SchemaError("enum must be an array")
            if not any(json_equal(instance, o) for o in options):
                errors.append(ValidationError(where, "enum", "value not in enumeration"))

        if "required" in schema:
            req = schema["required"]
            if not isinstance(req, list) or not all(isinstance(r, str) for r in req):
                raise SchemaError("required must be an array of strings")
            if isinstance(instance, dict):
                for r in req:
                    if r not in instance:
                        errors.append(ValidationError(where, "required", f"{r!r} is a required property"))

        if "properties" in schema:
            props = schema["properties"]
            if not isinstance(props, dict):
                raise SchemaError("properties must be an object")
            if isinstance(instance, dict):
                for k, sub in props.items():
                    if k in instance:
                        self.check(instance[k], sub, path + [k], errors)

        if "items" in schema:
            items = schema["items"]
            if isinstance(items, list):
                if "items[]" not in self.warned:
                    self.warned.add("items[]")
                    warnings.warn("positional items are not supported and were ignored",
                                  UnsupportedKeywordWarning, stacklevel=4)
            elif isinstance(instance, list):
                for i, x in enumerate(instance):
                    self.check(x, items, path + [i], errors)

        if "allOf" in schema:
            for sub in self._subschemas(schema, "allOf"):
                self.check(instance, sub, path, errors)

        if "anyOf" in schema:
            subs = self._subschemas(schema, "anyOf")
            if not any(self.passes(instance, s, path) for s in subs):
                errors.append(ValidationError(where, "anyOf", "no alternative matched"))

        if "if" in schema:
            if self.passes(instance, schema["if"], path):
                if "then" in schema:
                    self.check(instance, schema["then"], path, errors)
            elif "else" in schema:
                self.check(instance, schema["else"], path, errors)

    def passes(self, instance, schema, path) -> bool:
        errs: list = []
        self.check(instance, schema, path, errs)
        return not errs

    @staticmethod
    def _subschemas(schema, kw):
        subs = schema[kw]
        if not isinstance(subs, list):
            raise SchemaError(f"{kw} must be an array")
        return subs


def validate(instance, schema) -> ValidationResult:
    result = ValidationResult()
    _Validator().check(instance, schema, [], result.errors)
    return result


def is_valid(instance, schema) -> bool:
    return validate(instance, schema).valid
