"""Hypothesis strategies shared across the test modules."""

from decimal import Decimal

from hypothesis import strategies as st

from tagunion.encoding import OBJECT_ID, Basic, ObjectRelation, Subschema, type_attr, value_attr
from tagunion.jsoncore import PathKey

NUMBERS = Subschema("array", (Subschema("number"),))

VALUE_CELLS = [
    None,
    Basic("string", "x"),
    Basic("string", "y"),
    Basic("number", Decimal(1)),
    Basic("boolean", True),
]
TYPE_CELLS = [
    None,
    Subschema("number"),
    Subschema("string"),
    NUMBERS,
    Subschema("array", (NUMBERS,)),
    Subschema("object"),
]
LABELS = ["a", "b", "c", "d"]


@st.composite
def relations(draw, max_attrs=8, max_rows=64):
    """Random relations with mixed missing cells; O.id counts toward ``max_attrs``."""
    candidates = [value_attr(l) for l in LABELS] + [
        type_attr(l, d) for l in LABELS for d in (1, 2)
    ]
    attrs = draw(
        st.lists(st.sampled_from(candidates), unique=True, max_size=max_attrs - 1)
    )
    attrs.sort(key=candidates.index)
    n = draw(st.integers(0, max_rows))
    # skewed domains so that clusters of size > 1 are common
    columns = {OBJECT_ID: list(range(n))}
    for a in attrs:
        domain = VALUE_CELLS if a.role == "value" else TYPE_CELLS
        width = draw(st.integers(1, len(domain)))
        columns[a] = draw(st.lists(st.sampled_from(domain[:width]), min_size=n, max_size=n))
    return ObjectRelation(PathKey(), [OBJECT_ID] + attrs, columns)


# instances and schemas for the validator
PROPS = ["p", "q", "r"]

json_instances = st.recursive(
    st.none() | st.booleans() | st.integers(-2, 2) | st.sampled_from([1.5, "a", "b"]),
    lambda inner: st.lists(inner, max_size=3)
    | st.dictionaries(st.sampled_from(PROPS), inner, max_size=3),
    max_leaves=10,
)

TYPE_NAMES = ["null", "boolean", "object", "array", "number", "string", "integer"]


def _keyword_schemas(inner):
    type_kw = st.sampled_from(TYPE_NAMES) | st.lists(
        st.sampled_from(TYPE_NAMES), min_size=1, max_size=3, unique=True)
    return st.fixed_dictionaries(
        {},
        optional={
            "type": type_kw,
            "const": json_instances,
            "enum": st.lists(json_instances, min_size=1, max_size=3),
            "required": st.lists(st.sampled_from(PROPS), max_size=2, unique=True),
            "properties": st.dictionaries(st.sampled_from(PROPS), inner, max_size=2),
            "items": inner,
            "allOf": st.lists(inner, min_size=1, max_size=2),
            "anyOf": st.lists(inner, min_size=1, max_size=2),
            "if": inner,
            "then": inner,
            "else": inner,
        },
    )


json_schemas = st.recursive(
    st.booleans() | st.just({}) | st.fixed_dictionaries({"type": st.sampled_from(TYPE_NAMES)}),
    _keyword_schemas,
    max_leaves=6,
)
