"""Regenerate the synthetic GeoJSON/TopoJSON fixtures in src/tagunion/data.

    python3 scripts/make_fixtures.py
"""

import json
import random
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "tagunion" / "data"


def _pt(rng):
    return [rng.randint(-180, 180), rng.randint(-90, 90)]


def _ring(rng, n):
    pts = [_pt(rng) for _ in range(n)]
    return pts + [pts[0]]


def geojson_features(rng, n=60):
    kinds = ["Point"] * 5 + ["LineString"] * 3 + ["Polygon"] * 2 + ["MultiPolygon"]
    categories = ["park", "river", "road", "site"]
    features = []
    for i in range(n):
        kind = rng.choice(kinds)
        if kind == "Point":
            coords = _pt(rng)
        elif kind == "LineString":
            coords = [_pt(rng) for _ in range(rng.randint(2, 5))]
        elif kind == "Polygon":
            coords = [_ring(rng, rng.randint(3, 5))]
        else:
            coords = [[_ring(rng, 3)] for _ in range(rng.randint(2, 3))]
        props = {"id": f"F{i:04d}", "category": rng.choice(categories)}
        if rng.random() < 0.3:
            props["note"] = None
        features.append({"type": "Feature", "geometry": {"type": kind, "coordinates": coords},
                         "properties": props})
    return {"type": "FeatureCollection", "features": features}


def topojson_regions(rng, n=50):
    arcs = [[_pt(rng) for _ in range(rng.randint(2, 4))] for _ in range(40)]

    def arc_list(k):
        return [rng.randrange(len(arcs)) for _ in range(k)]

    kinds = ["Polygon"] * 4 + ["MultiPolygon"] * 2 + ["LineString"] * 2 + ["MultiLineString", "Point"]
    geometries = []
    for i in range(n):
        kind = rng.choice(kinds)
        geom = {"type": kind}
        if kind == "Point":
            geom["coordinates"] = _pt(rng)
        elif kind == "LineString":
            geom["arcs"] = arc_list(rng.randint(1, 3))
        elif kind in ("Polygon", "MultiLineString"):
            geom["arcs"] = [arc_list(rng.randint(1, 3)) for _ in range(rng.randint(1, 2))]
        else:
            geom["arcs"] = [[arc_list(2)] for _ in range(rng.randint(2, 3))]
        geom["properties"] = {"name": f"region-{i}", "level": rng.choice([1, 2, 3])}
        geometries.append(geom)
    return {
        "type": "Topology",
        "transform": {"scale": [0.001, 0.001], "translate": [5.8, 47.2]},
        "objects": {"regions": {"type": "GeometryCollection", "geometries": geometries}},
        "arcs": arcs,
    }


def main():
    rng = random.Random(20220329)
    (DATA / "geo_features.json").write_text(json.dumps(geojson_features(rng), indent=2) + "\n")
    (DATA / "topo_regions.json").write_text(json.dumps(topojson_regions(rng), indent=2) + "\n")


if __name__ == "__main__":
    main()
