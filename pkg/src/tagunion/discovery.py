"""Discovery of value-type ucCFDs ``[A.value = c] -> [B.type@d = s]``.

A dependency holds when the cluster of rows with ``A.value = c`` in the
position list index of ``A.value`` is contained in a single cluster of the
index of ``B.type@d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .encoding import AttributeId, Basic, ObjectRelation, Subschema
from .jsoncore import PathKey


@dataclass(frozen=True)
class PositionListIndex:
    attribute: AttributeId
    clusters: tuple  # ((cell value, (row, ...)), ...) in order of first occurrence

    def __len__(self):
        return len(self.clusters)

    def partition(self) -> set:
        return {frozenset(rows) for _, rows in self.clusters}

    def row_to_cluster(self, n_rows: int) -> list[int]:
        ids = [-1] * n_rows
        for cid, (_, rows) in enumerate(self.clusters):
            for r in rows:
                ids[r] = cid
        return ids

    @property
    def all_singletons(self) -> bool:
        return all(len(rows) == 1 for _, rows in self.clusters)


def build_pli(rel: ObjectRelation, attr: AttributeId) -> PositionListIndex:
    groups: dict = {}
    for pos, cell in enumerate(rel.columns[attr]):
        if cell is not None:
            groups.setdefault(cell, []).append(pos)
    return PositionListIndex(attr, tuple((v, tuple(rows)) for v, rows in groups.items()))


@dataclass(frozen=True)
class UcCfd:
    """``[tag.value = constant] -> [consequent.type@depth = schema]`` at ``path``."""

    path: PathKey
    tag: str
    constant: Basic
    consequent: str
    depth: int
    schema: Subschema
    support: int
    witnesses: tuple

    def sort_key(self):
        return (self.path.render(), self.tag, self.constant.text, self.consequent, -self.depth)

    @property
    def lhs(self):
        return (self.path, self.tag, self.constant)

    def __str__(self):
        return (
            f"{self.path.render() or '<root>'}: [{self.tag}.value={self.constant.text}]"
            f" -> [{self.consequent}.type@{self.depth}={self.schema.text}]"
            f" (support {self.support})"
        )


def _check_args(tag_attrs, consequent_attrs):
    for a in tag_attrs:
        if a.role != "value":
            raise ValueError(f"{a} is not a value attribute")
    for b in consequent_attrs:
        if b.role != "type":
            raise ValueError(f"{b} is not a type attribute")


def discover_candidates(
    rel: ObjectRelation,
    tag_attrs: list | None = None,
    consequent_attrs: list | None = None,
) -> list[UcCfd]:
    """All candidates, one per (tag cluster, consequent attribute) inclusion."""
    tag_attrs = rel.value_attributes if tag_attrs is None else list(tag_attrs)
    consequent_attrs = rel.type_attributes if consequent_attrs is None else list(consequent_attrs)
    _check_args(tag_attrs, consequent_attrs)
    n = len(rel)
    tag_plis = [build_pli(rel, a) for a in tag_attrs]
    out = []
    for b in consequent_attrs:
        pli_b = build_pli(rel, b)
        ids = pli_b.row_to_cluster(n)
        for pli_a in tag_plis:
            if pli_a.attribute.label == b.label:
                continue
            for const, rows in pli_a.clusters:
                cid = ids[rows[0]]
                if cid < 0 or any(ids[r] != cid for r in rows):
                    continue
                out.append(
                    UcCfd(
                        rel.path,
                        pli_a.attribute.label,
                        const,
                        b.label,
                        b.depth,
                        pli_b.clusters[cid][0],
                        len(rows),
                        rows,
                    )
                )
    out.sort(key=UcCfd.sort_key)
    return out


def brute_force_candidates(
    rel: ObjectRelation,
    tag_attrs: list | None = None,
    consequent_attrs: list | None = None,
) -> list[UcCfd]:
    """Check the ucCFD definition directly over all tuple pairs."""
    tag_attrs = rel.value_attributes if tag_attrs is None else list(tag_attrs)
    consequent_attrs = rel.type_attributes if consequent_attrs is None else list(consequent_attrs)
    _check_args(tag_attrs, consequent_attrs)
    rows = list(rel.rows())
    out = []
    for a in tag_attrs:
        constants = []
        for r in rows:
            if r[a] is not None and r[a] not in constants:
                constants.append(r[a])
        for c in constants:
            matching = [i for i, r in enumerate(rows) if r[a] == c]
            for b in consequent_attrs:
                if b.label == a.label:
                    continue
                sigma = rows[matching[0]][b]
                holds = sigma is not None and all(
                    rows[s][b] == sigma and rows[t][b] == sigma
                    for s in matching
                    for t in matching
                )
                if holds:
                    out.append(
                        UcCfd(rel.path, a.label, c, b.label, b.depth, sigma,
                              len(matching), tuple(matching))
                    )
    out.sort(key=UcCfd.sort_key)
    return out


def deepest_valid_depth(candidates) -> UcCfd | None:
    """The most detailed candidate among those sharing (path, tag, constant, consequent)."""
    candidates = list(candidates)
    if not candidates:
        return None
    keys = {(c.path, c.tag, c.constant, c.consequent) for c in candidates}
    if len(keys) != 1:
        raise ValueError("candidates must share tag, constant and consequent")
    return max(candidates, key=lambda c: c.depth)


def resolve_depths(candidates: list[UcCfd]) -> list[UcCfd]:
    """Keep only the deepest candidate for each (path, tag, constant, consequent)."""
    ordered = sorted(candidates, key=UcCfd.sort_key)
    out = []
    for _, group in groupby(ordered, key=lambda c: (c.path, c.tag, c.constant, c.consequent)):
        out.append(deepest_valid_depth(group))
    return out
