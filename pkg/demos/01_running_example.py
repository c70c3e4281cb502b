"""
Tagged unions in a GeoJSON geometry collection
==============================================

Encode the objects under ``geometries[*]``, find the value-type
dependencies with position list indexes, and emit them as if-then-else.
"""

# %%
import json

from tagunion import fixtures
from tagunion.discovery import build_pli, discover_candidates, resolve_depths
from tagunion.emitter import emit_if_then_else
from tagunion.encoding import encode_relation, value_attr
from tagunion.heuristics import apply_union_rule, discovery_attributes
from tagunion.jsoncore import WILDCARD, PathKey

coll = fixtures.load("geometries")
path = PathKey(("geometries", WILDCARD))

# %% one row per object, one column per label and relaxation depth
rel = encode_relation(coll, path, 6)
for row in rel.rows():
    print({str(a): (None if v is None else getattr(v, "text", v)) for a, v in row.items()
           if a.role != "type" or a.depth in (1, 6)})

# %% the tag column partitions the rows
print(build_pli(rel, value_attr("type")).clusters)

# %% discovery over the attributes that survive the default heuristics
tags, consequents = discovery_attributes(rel)
cands = resolve_depths(discover_candidates(rel, tags, consequents))
for c in cands:
    print(f"[{c.tag}.value={c.constant.text}] -> [{c.consequent}.type@{c.depth}]  support={c.support}")

# %% one group, two cases, rendered as nested if-then-else
[group] = apply_union_rule(cands)
print(json.dumps(emit_if_then_else(group), indent=2))
