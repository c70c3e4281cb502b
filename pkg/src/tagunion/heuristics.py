"""Pruning of candidate dependencies against overfitting.

Default heuristics drop single-valued and unique attributes before discovery
and merge dependencies sharing a tag constant (union rule). The minimum
threshold on support is configurable as a fraction of the relation's rows or
as an absolute row count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

from .discovery import UcCfd, build_pli
from .encoding import DEFAULT_MAX_DEPTH, OBJECT_ID, ObjectRelation
from .jsoncore import PathKey

DEFAULT_THRESHOLD = 0.15
THRESHOLD_GRID = (0.50, 0.35, 0.15)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class HeuristicsConfig:
    threshold: float = DEFAULT_THRESHOLD
    mode: str = "relative"
    k: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        if self.mode == "relative":
            if not 0 < self.threshold <= 1:
                raise ConfigError(f"relative threshold must be in (0, 1], got {self.threshold}")
        elif self.mode == "absolute":
            if self.threshold < 1:
                raise ConfigError(f"absolute threshold must be >= 1, got {self.threshold}")
        else:
            raise ConfigError(f"unknown threshold mode {self.mode!r}")
        if self.k < 1:
            raise ConfigError(f"max depth must be >= 1, got {self.k}")

    def min_support(self, n_rows: int) -> Fraction:
        if self.mode == "absolute":
            return Fraction(str(self.threshold))
        # decimal string avoids 0.35 * 20 = 7.000000000000001
        return Fraction(str(self.threshold)) * n_rows


def drop_single_valued(rel: ObjectRelation) -> list:
    """Attributes of ``rel`` whose non-missing cells carry at least two values."""
    keep = []
    for a in rel.attributes:
        distinct = set(c for c in rel.columns[a] if c is not None)
        if len(distinct) != 1:
            keep.append(a)
    return keep


def drop_unique(rel: ObjectRelation) -> list:
    """Attributes of ``rel`` minus O.id and value attributes with only singleton clusters."""
    keep = []
    for a in rel.attributes:
        if a == OBJECT_ID:
            continue
        if a.role == "value":
            pli = build_pli(rel, a)
            if len(pli) and pli.all_singletons:
                continue
        keep.append(a)
    return keep


def discovery_attributes(rel: ObjectRelation) -> tuple[list, list]:
    """(tag attributes, consequent attributes) surviving the default drops."""
    retained = set(drop_single_valued(rel)) & set(drop_unique(rel))
    attrs = [a for a in rel.attributes if a in retained]
    return [a for a in attrs if a.role == "value"], [a for a in attrs if a.role == "type"]


def apply_threshold(cands: list[UcCfd], n_rows: int, cfg: HeuristicsConfig) -> list[UcCfd]:
    bound = cfg.min_support(n_rows)
    return [c for c in cands if c.support >= bound]


@dataclass(frozen=True)
class Case:
    """One tag constant with every dependency it implies."""

    dependencies: tuple

    @property
    def constant(self):
        return self.dependencies[0].constant

    @property
    def support(self) -> int:
        return self.dependencies[0].support

    @property
    def first_row(self) -> int:
        return self.dependencies[0].witnesses[0]

    @property
    def consequents(self) -> list:
        return [(d.consequent, d.schema) for d in self.dependencies]


@dataclass(frozen=True)
class TaggedUnionGroup:
    path: PathKey
    tag: str
    cases: tuple

    def flatten(self) -> list[UcCfd]:
        return [d for case in self.cases for d in case.dependencies]


def apply_union_rule(cands: list[UcCfd]) -> list[TaggedUnionGroup]:
    """Merge candidates sharing (path, tag, constant) into cases, grouped by tag.

    Cases are ordered by descending support, ties broken by where the constant
    first occurs in the relation.
    """
    def group_key(c):
        return (c.path.render(), c.tag)

    def case_key(c):
        return (c.path.render(), c.tag, c.constant.text)

    groups = []
    for (_, _), members in groupby(sorted(cands, key=UcCfd.sort_key), key=group_key):
        members = list(members)
        cases = [
            Case(tuple(sorted(deps, key=lambda d: (d.consequent, -d.depth))))
            for _, deps in groupby(members, key=case_key)
        ]
        cases.sort(key=lambda c: (-c.support, c.first_row, c.constant.text))
        groups.append(TaggedUnionGroup(members[0].path, members[0].tag, tuple(cases)))
    return groups
