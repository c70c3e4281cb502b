"""JSON documents, labeled paths and the canonical pretty-printer.

Values are plain Python objects (``None``, ``bool``, ``int``, ``Decimal``,
``str``, ``list``) except objects, which are :class:`JsonObject` instances
carrying their source location. Fractional numbers are kept as ``Decimal`` so
that equality is mathematical and the lexeme survives a round trip.
"""

from __future__ import annotations

import bisect
import json
import re
from dataclasses import dataclass, field
from decimal import Decimal
from pathlib import Path
from typing import Iterable, Iterator

__all__ = [
    "JsonObject",
    "JsonSyntaxError",
    "PathKey",
    "WILDCARD",
    "DocumentCollection",
    "parse_documents",
    "load_documents",
    "enumerate_object_paths",
    "objects_at_path",
    "dumps",
    "pretty_line_count",
    "kind_of",
]

MODES = ("single", "ndjson", "array")


class JsonSyntaxError(ValueError):
    """Raised for malformed input. ``offset`` is a byte offset into the source."""

    def __init__(self, message: str, document: int, offset: int | None = None):
        where = f"document {document}"
        if offset is not None:
            where += f", byte {offset}"
        super().__init__(f"{message} ({where})")
        self.document = document
        self.offset = offset


class JsonObject(dict):
    """A JSON object that remembers where it came from.

    ``doc`` is the document index, ``line`` the source line of the opening
    brace and ``pretty_line`` the line of the opening brace once the document
    is printed by :func:`dumps`. ``(doc, pretty_line)`` is unique per object.
    """

    __slots__ = ("doc", "line", "pretty_line")

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.doc = 0
        self.line = 0
        self.pretty_line = 0

    @property
    def object_id(self) -> tuple[int, int]:
        return (self.doc, self.pretty_line)


def kind_of(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, (int, float, Decimal)):
        return "number"
    if isinstance(value, str):
        return "string"
    if isinstance(value, dict):
        return "object"
    if isinstance(value, list):
        return "array"
    raise TypeError(f"not a JSON value: {type(value).__name__}")


# --------------------------------------------------------------------------
# paths


class _Wildcard:
    __slots__ = ()

    def __repr__(self):
        return "WILDCARD"

    def __reduce__(self):
        return "WILDCARD"


WILDCARD = _Wildcard()


def _escape_label(label: str) -> str:
    return label.replace("~", "~0").replace("/", "~1").replace("[", "~2")


@dataclass(frozen=True, order=False)
class PathKey:
    """A labeled path from a document root: property labels and ``[*]`` steps.

    The root path has no segments and renders as the empty string.
    """

    segments: tuple = ()

    def child(self, label: str) -> "PathKey":
        return PathKey(self.segments + (label,))

    def items(self) -> "PathKey":
        return PathKey(self.segments + (WILDCARD,))

    def render(self) -> str:
        return "".join(
            "[*]" if s is WILDCARD else "/" + _escape_label(s) for s in self.segments
        )

    def __str__(self):
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "PathKey":
        segs: list = []
        for token in re.findall(r"\[\*\]|/[^/\[]*", text):
            if token == "[*]":
                segs.append(WILDCARD)
            else:
                segs.append(
                    token[1:].replace("~2", "[").replace("~1", "/").replace("~0", "~")
                )
        key = cls(tuple(segs))
        if key.render() != text:
            raise ValueError(f"malformed path: {text!r}")
        return key


ROOT = PathKey()


# --------------------------------------------------------------------------
# parsing

_BRACE_OR_STRING = re.compile(r'"(?:[^"\\]|\\.)*"|\{', re.S)


def _object_hook(pairs):
    obj = JsonObject()
    for key, value in pairs:
        if key in obj:
            raise _DuplicateLabel(key)
        obj[key] = value
    return obj


class _DuplicateLabel(Exception):
    pass


def _reject_constant(name):
    raise ValueError(f"{name} is not valid JSON")


def _decode(text: str, document: int, base: int = 0):
    try:
        return json.loads(
            text,
            object_pairs_hook=_object_hook,
            parse_float=Decimal,
            parse_constant=_reject_constant,
        )
    except json.JSONDecodeError as exc:
        offset = base + len(text[: exc.pos].encode("utf-8"))
        raise JsonSyntaxError(exc.msg, document, offset) from None
    except _DuplicateLabel as exc:
        raise JsonSyntaxError(f"duplicate label {exc.args[0]!r}", document) from None
    except ValueError as exc:
        raise JsonSyntaxError(str(exc), document) from None


def _iter_objects_preorder(value) -> Iterator[JsonObject]:
    stack = [value]
    while stack:
        v = stack.pop()
        if isinstance(v, dict):
            yield v
            stack.extend(reversed(list(v.values())))
        elif isinstance(v, list):
            stack.extend(reversed(v))


def _assign_source_lines(text: str, values: Iterable, first_line: int = 1) -> None:
    """Attach source line numbers using the order of ``{`` tokens in ``text``.

    Opening braces occur in the text in pre-order, which is exactly the order
    in which :func:`_iter_objects_preorder` visits the parsed objects.
    """
    newlines = [m.start() for m in re.finditer("\n", text)]
    braces = (m.start() for m in _BRACE_OR_STRING.finditer(text) if m.group() == "{")
    for value in values:
        for obj in _iter_objects_preorder(value):
            pos = next(braces)
            obj.line = first_line + bisect.bisect_left(newlines, pos)


def _assign_pretty_lines(value, doc: int) -> int:
    """Set ``doc``/``pretty_line`` on every object; return the document's LoC."""

    def walk(v, line: int) -> int:
        # returns the number of lines ``v`` occupies when printed at ``line``
        if isinstance(v, dict):
            v.doc = doc
            v.pretty_line = line
            if not v:
                return 1
            used = 1
            for child in v.values():
                used += walk(child, line + used)
            return used + 1
        if isinstance(v, list):
            if not v:
                return 1
            used = 1
            for child in v:
                used += walk(child, line + used)
            return used + 1
        return 1

    return walk(value, 1)


@dataclass
class DocumentCollection:
    """Parsed documents hung under a virtual root.

    Paths are taken relative to each document root; the virtual root itself
    contributes no path segment, so the same labeled path pools objects across
    all documents.
    """

    documents: list = field(default_factory=list)
    sizes: list = field(default_factory=list)
    _index: dict | None = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.documents)

    @property
    def loc(self) -> int:
        """Lines of code of all documents after pretty-printing."""
        return sum(self.sizes)

    def object_index(self) -> dict:
        if self._index is None:
            index: dict[PathKey, list[JsonObject]] = {}

            def walk(v, path: PathKey):
                if isinstance(v, dict):
                    index.setdefault(path, []).append(v)
                    for label, child in v.items():
                        if isinstance(child, (dict, list)):
                            walk(child, path.child(label))
                elif isinstance(v, list):
                    inner = path.items()
                    for child in v:
                        if isinstance(child, (dict, list)):
                            walk(child, inner)

            for doc in self.documents:
                walk(doc, ROOT)
            self._index = index
        return self._index


def parse_documents(data, mode: str = "single") -> DocumentCollection:
    """Parse ``data`` (str, bytes, or a list of those, one per file).

    ``mode`` is ``single`` (each input is one document), ``ndjson`` (one
    document per non-blank line) or ``array`` (each input is a top-level array
    whose elements are the documents).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    sources = data if isinstance(data, list) else [data]
    documents: list = []
    for src in sources:
        text = src.decode("utf-8") if isinstance(src, (bytes, bytearray)) else src
        if text.startswith("﻿"):
            text = text[1:]
        if mode == "single":
            value = _decode(text, len(documents))
            _assign_source_lines(text, [value])
            documents.append(value)
        elif mode == "ndjson":
            offset = 0
            for lineno, line in enumerate(text.split("\n"), start=1):
                if line.strip():
                    value = _decode(line, len(documents), offset)
                    _assign_source_lines(line, [value], lineno)
                    documents.append(value)
                offset += len(line.encode("utf-8")) + 1
        else:
            value = _decode(text, len(documents))
            if not isinstance(value, list):
                raise JsonSyntaxError(
                    "array mode expects a top-level array", len(documents), 0
                )
            _assign_source_lines(text, value)
            documents.extend(value)
    sizes = [_assign_pretty_lines(doc, i) for i, doc in enumerate(documents)]
    return DocumentCollection(documents, sizes)


def load_documents(paths, mode: str = "single") -> DocumentCollection:
    if isinstance(paths, (str, Path)):
        paths = [paths]
    return parse_documents([Path(p).read_bytes() for p in paths], mode)


def enumerate_object_paths(coll: DocumentCollection) -> set:
    return set(coll.object_index())


def objects_at_path(coll: DocumentCollection, path: PathKey) -> list:
    """``(object_id, object)`` pairs in document order, then traversal order."""
    return [(o.object_id, o) for o in coll.object_index().get(path, [])]


# --------------------------------------------------------------------------
# canonical serialization


def _number_text(value) -> str:
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"{value} is not a JSON number")
        return str(value)
    if isinstance(value, float):
        return json.dumps(value)
    return str(value)


def _scalar(value) -> str:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, (int, float, Decimal)):
        return _number_text(value)
    raise TypeError(f"not a JSON value: {type(value).__name__}")


def dumps(value, indent: int | None = 2) -> str:
    """Serialize with 2-space indentation (``indent=None`` for compact).

    The layout matches ``json.dumps(value, indent=2, ensure_ascii=False)`` and
    additionally handles ``Decimal``. Key order is insertion order.
    """
    if indent is None:
        return _compact(value)
    out: list[str] = []

    def emit(v, level: int):
        if isinstance(v, dict):
            if not v:
                out.append("{}")
                return
            pad = " " * (indent * (level + 1))
            out.append("{")
            for i, (k, child) in enumerate(v.items()):
                out.append("\n" + pad + json.dumps(k, ensure_ascii=False) + ": ")
                emit(child, level + 1)
                if i < len(v) - 1:
                    out.append(",")
            out.append("\n" + " " * (indent * level) + "}")
        elif isinstance(v, list):
            if not v:
                out.append("[]")
                return
            pad = " " * (indent * (level + 1))
            out.append("[")
            for i, child in enumerate(v):
                out.append("\n" + pad)
                emit(child, level + 1)
                if i < len(v) - 1:
                    out.append(",")
            out.append("\n" + " " * (indent * level) + "]")
        else:
            out.append(_scalar(v))

    emit(value, 0)
    return "".join(out)


def _compact(value) -> str:
    if isinstance(value, dict):
        return (
            "{"
            + ",".join(
                json.dumps(k, ensure_ascii=False) + ":" + _compact(v)
                for k, v in value.items()
            )
            + "}"
        )
    if isinstance(value, list):
        return "[" + ",".join(_compact(v) for v in value) + "]"
    return _scalar(value)


def pretty_line_count(value) -> int:
    return dumps(value).count("\n") + 1
