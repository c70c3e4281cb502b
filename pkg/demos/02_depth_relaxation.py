"""
Relaxing subschemas until the objects agree
===========================================

In the Minecraft predicates the tag is ``condition``. The nested ``min`` is
a number in one file and an object in the other, so the two ``value``
objects only agree on their kind.
"""

# %%
from tagunion import fixtures
from tagunion.discovery import discover_candidates, resolve_depths
from tagunion.encoding import encode_relation, to_schema
from tagunion.jsoncore import WILDCARD, PathKey

coll = fixtures.load("minecraft")
rel = encode_relation(coll, PathKey((WILDCARD,)), 6)

# %% every depth at which a dependency holds
for c in discover_candidates(rel):
    if c.tag == "condition":
        print(c.constant.text, c.consequent, c.depth, to_schema(c.schema))

# %% only the deepest one is kept: period in full detail, value as "object"
for c in resolve_depths(discover_candidates(rel)):
    if c.tag == "condition":
        print(c.constant.text, c.consequent, c.depth, to_schema(c.schema))
