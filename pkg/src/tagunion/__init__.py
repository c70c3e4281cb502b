"""Discovery of tagged unions in JSON data as JSON Schema if-then-else constraints."""

from .baseline import extract_structural_schema, load_external_schema
from .discovery import (
    PositionListIndex,
    UcCfd,
    brute_force_candidates,
    build_pli,
    deepest_valid_depth,
    discover_candidates,
    resolve_depths,
)
from .emitter import compose, emit_anyof, emit_if_then_else, line_count, nest_groups_into_T, ratio_t
from .encoding import (
    AttributeId,
    Basic,
    ObjectRelation,
    Subschema,
    derive_subschema,
    encode_relation,
    truncate,
)
from .heuristics import (
    HeuristicsConfig,
    TaggedUnionGroup,
    apply_threshold,
    apply_union_rule,
    drop_single_valued,
    drop_unique,
)
from .jsoncore import (
    DocumentCollection,
    PathKey,
    dumps,
    enumerate_object_paths,
    load_documents,
    objects_at_path,
    parse_documents,
)
from .pipeline import ExtractionReport, PipelineConfig, emit_report, run_pipeline, write_outputs
from .validator import ValidationResult, is_valid, validate

__version__ = "0.1.0"
