"""Small datasets shipped with the package.

``geometries``
    The GeoJSON GeometryCollection of the running example (Point/LineString).
``minecraft``
    Two Minecraft predicate files where ``condition`` is the tag and the
    nested ``min`` is numeric in one object and an object in the other.
``geo_features``, ``topo_regions``
    Synthetic GeoJSON FeatureCollection and TopoJSON Topology, generated by
    ``scripts/make_fixtures.py``.
"""

from importlib import resources

from .jsoncore import DocumentCollection, parse_documents

BUNDLED = {
    "geometries": ("geometries.json",),
    "minecraft": ("minecraft_a.json", "minecraft_b.json"),
    "geo_features": ("geo_features.json",),
    "topo_regions": ("topo_regions.json",),
}

DATASETS = tuple(BUNDLED)


def read_text(name: str) -> str:
    return resources.files(__package__).joinpath("data", name).read_text(encoding="utf-8")


def load(name: str) -> DocumentCollection:
    return parse_documents([read_text(f) for f in BUNDLED[name]])
