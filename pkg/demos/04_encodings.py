"""
if-then-else versus anyOf
=========================

Both encodings accept every object the dependencies were mined from. They
differ on tag values that have no case: if-then-else leaves them
unconstrained, anyOf rejects them.
"""

# %%
import copy
import json

from tagunion import fixtures
from tagunion.pipeline import PipelineConfig, run_pipeline
from tagunion.validator import validate

coll = fixtures.load("geometries")
ite = run_pipeline(coll, PipelineConfig(encoding="ite"))
anyof = run_pipeline(coll, PipelineConfig(encoding="anyof"))
print(json.dumps(anyof.T, indent=2))

# %% a tag value never seen during extraction
doc = copy.deepcopy(coll.documents[0])
doc["geometries"].append({"type": "Circle", "coordinates": [0, 0]})
print("ite:  ", validate(doc, ite.composite).valid)
print("anyOf:", validate(doc, anyof.composite).errors)
