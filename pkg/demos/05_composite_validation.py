"""
Baseline schema, composite schema, and what the composite adds
==============================================================
"""

# %%
import copy
import json

from tagunion import fixtures
from tagunion.pipeline import run_pipeline
from tagunion.validator import validate

coll = fixtures.load("geometries")
result = run_pipeline(coll)
print(json.dumps(result.S, indent=2))

# %% a Point with the coordinates of a LineString
doc = copy.deepcopy(coll.documents[0])
doc["geometries"][0]["coordinates"] = [doc["geometries"][0]["coordinates"]]

print("baseline: ", validate(doc, result.S).valid)
for err in validate(doc, result.composite).errors:
    print("composite:", err)

# %% report fields, as written to report.json
print(result.report.to_dict())
