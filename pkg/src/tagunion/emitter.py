"""Rendering tagged unions as JSON Schema and composing them with a baseline."""

from __future__ import annotations

from pathlib import Path

from .encoding import basic, from_schema, to_schema
from .heuristics import TaggedUnionGroup
from .jsoncore import WILDCARD, PathKey, dumps

DRAFT_07 = "http://json-schema.org/draft-07/schema#"
ENCODINGS = ("ite", "anyof")


def _condition(tag: str, constant) -> dict:
    return {"properties": {tag: {"const": constant.to_json()}}, "required": [tag]}


def _consequents(case) -> dict:
    return {label: to_schema(schema) for label, schema in case.consequents}


def emit_if_then_else(group: TaggedUnionGroup) -> dict:
    """Right-nested ``if``/``then``/``else`` chain, one link per case.

    The last case has no ``else``, so unexpected tag values stay valid.
    """
    if not group.cases:
        raise ValueError("group has no cases")
    node: dict | None = None
    for case in reversed(group.cases):
        link = {
            "if": _condition(group.tag, case.constant),
            "then": {"properties": _consequents(case)},
        }
        if node is not None:
            link["else"] = node
        node = link
    return node


def emit_anyof(group: TaggedUnionGroup) -> dict:
    if not group.cases:
        raise ValueError("group has no cases")
    branches = []
    for case in group.cases:
        props = {group.tag: {"const": case.constant.to_json()}}
        props.update(_consequents(case))
        branches.append({"type": "object", "properties": props})
    return {"anyOf": branches}


def read_cases(node: dict) -> tuple[str, list]:
    """Recover ``(tag, [(constant, [(label, Subschema), ...]), ...])`` from either encoding."""
    cases = []
    tag = None
    if "anyOf" in node:
        for branch in node["anyOf"]:
            props = dict(branch["properties"])
            if tag is None:
                tag = next(k for k, v in props.items() if "const" in v)
            const = props.pop(tag)["const"]
            cases.append((basic(const), [(k, from_schema(v)) for k, v in props.items()]))
        return tag, cases
    link = node
    while link is not None:
        (tag, cond), = link["if"]["properties"].items()
        then = link["then"]["properties"]
        cases.append((basic(cond["const"]), [(k, from_schema(v)) for k, v in then.items()]))
        link = link.get("else")
    return tag, cases


def wrap_at_path(path: PathKey, node: dict) -> dict:
    for seg in reversed(path.segments):
        node = {"items": node} if seg is WILDCARD else {"properties": {seg: node}}
    return node


def emit_group(group: TaggedUnionGroup, encoding: str = "ite") -> dict:
    if encoding == "ite":
        return emit_if_then_else(group)
    if encoding == "anyof":
        return emit_anyof(group)
    raise ValueError(f"unknown encoding {encoding!r}; expected one of {ENCODINGS}")


def nest_groups_into_T(groups, encoding: str = "ite") -> dict:
    """Schema T placing every group's constraint at its path.

    ``groups`` is an iterable of :class:`TaggedUnionGroup` or a mapping from
    path to such groups.
    """
    if isinstance(groups, dict):
        groups = [g for gs in groups.values() for g in gs]
    ordered = sorted(groups, key=lambda g: (g.path.render(), g.tag))
    parts = [wrap_at_path(g.path, emit_group(g, encoding)) for g in ordered]
    if not parts:
        return {}
    if len(parts) == 1:
        return parts[0]
    return {"allOf": parts}


def compose(S: dict, T: dict) -> dict:
    return {"allOf": [S, T]}


def line_count(node) -> int:
    return dumps(node).count("\n") + 1


def ratio_t(s_lines: int, t_lines: int) -> float:
    """Share of T in ``compose(S, T)`` given the line counts of S and T.

    The ``{"allOf": [...]}`` framing adds four lines.
    """
    return t_lines / (s_lines + t_lines + 4)


def composite_document(S: dict, T: dict) -> dict:
    return {"$schema": DRAFT_07, **compose(S, T)}


def write_schema_files(S: dict, T: dict, outdir) -> dict:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    files = {
        "schema-S.json": S,
        "schema-T.json": T,
        "schema-ite.json": composite_document(S, T),
    }
    for name, node in files.items():
        (outdir / name).write_text(dumps(node) + "\n", encoding="utf-8")
    return {name: outdir / name for name in files}
