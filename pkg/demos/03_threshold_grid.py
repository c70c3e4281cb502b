"""
Minimum support
===============

Dependencies whose tag value is rare are pruned. Raising the threshold only
ever removes dependencies.
"""

# %%
from tagunion import fixtures
from tagunion.pipeline import PipelineConfig, emit_report, run_pipeline

coll = fixtures.load("geo_features")
reports = [run_pipeline(coll, PipelineConfig(threshold=t, name="geo_features")).report
           for t in (0.50, 0.35, 0.15)]
print(emit_report(reports, "table"))

# %% absolute mode counts rows instead of a fraction
r = run_pipeline(coll, PipelineConfig(threshold=10, threshold_mode="absolute")).report
print(r.cfds_with_threshold, r.cfds_with_threshold_and_heuristics)
