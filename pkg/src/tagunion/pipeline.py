"""End-to-end extraction: parse, encode, discover, prune, emit, compose, validate."""

from __future__ import annotations

import json
import logging
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .baseline import extract_structural_schema, load_external_schema
from .discovery import UcCfd, discover_candidates, resolve_depths
from .emitter import ENCODINGS, compose, line_count, nest_groups_into_T, ratio_t, write_schema_files
from .encoding import DEFAULT_MAX_DEPTH, encode_relation, write_relation_csv
from .heuristics import (
    DEFAULT_THRESHOLD,
    ConfigError,
    HeuristicsConfig,
    TaggedUnionGroup,
    apply_threshold,
    apply_union_rule,
    discovery_attributes,
)
from .jsoncore import DocumentCollection, dumps
from .validator import validate

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineConfig:
    threshold: float = DEFAULT_THRESHOLD
    threshold_mode: str = "relative"
    max_depth: int = DEFAULT_MAX_DEPTH
    encoding: str = "ite"
    baseline: object = "internal"  # "internal", a path, or an already loaded schema dict
    validate: bool = True
    dump_relations: str | None = None
    name: str = "dataset"

    def __post_init__(self):
        if self.encoding not in ENCODINGS:
            raise ConfigError(f"unknown encoding {self.encoding!r}")
        self.heuristics  # validates threshold and depth

    @property
    def heuristics(self) -> HeuristicsConfig:
        return HeuristicsConfig(self.threshold, self.threshold_mode, self.max_depth)


@dataclass
class ExtractionReport:
    dataset: str
    loc_D: int
    loc_S: int
    loc_T: int
    ratio_T: float
    cfds_without_heuristics: int
    cfds_with_threshold: int
    cfds_with_threshold_and_heuristics: int
    dependencies_after_heuristics: int
    valid: bool | None
    threshold: float
    threshold_mode: str
    max_depth: int
    encoding: str
    seconds: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class PathDiscovery:
    """Per-path counts and results, kept for inspection."""

    path: object
    rows: int
    without_heuristics: list
    with_threshold: list
    final: list
    groups: list


@dataclass
class PipelineResult:
    S: dict
    T: dict
    composite: dict
    groups: list
    report: ExtractionReport
    paths: list = field(default_factory=list)
    invalid_documents: list = field(default_factory=list)

    @property
    def dependencies(self) -> list[UcCfd]:
        return [d for g in self.groups for d in g.flatten()]


def discover_path(coll, path, cfg: HeuristicsConfig, memo=None) -> tuple[PathDiscovery, object]:
    rel = encode_relation(coll, path, cfg.k, memo)
    without = resolve_depths(discover_candidates(rel))
    with_threshold = apply_threshold(without, len(rel), cfg)
    tags, consequents = discovery_attributes(rel)
    final = apply_threshold(
        resolve_depths(discover_candidates(rel, tags, consequents)), len(rel), cfg
    )
    groups = apply_union_rule(final)
    return PathDiscovery(path, len(rel), without, with_threshold, final, groups), rel


def _baseline(coll: DocumentCollection, baseline) -> dict:
    if isinstance(baseline, dict):
        return baseline
    if baseline in (None, "internal"):
        return extract_structural_schema(coll)
    return load_external_schema(Path(baseline))


def run_pipeline(coll: DocumentCollection, config: PipelineConfig = PipelineConfig()) -> PipelineResult:
    if not len(coll):
        raise ValueError("no documents to extract from")
    start = time.perf_counter()
    cfg = config.heuristics
    S = _baseline(coll, config.baseline)

    memo: dict = {}
    found: list[PathDiscovery] = []
    dump_dir = Path(config.dump_relations) if config.dump_relations else None
    if dump_dir:
        dump_dir.mkdir(parents=True, exist_ok=True)
        index_lines = ["file,path"]
    for i, path in enumerate(sorted(coll.object_index(), key=lambda p: p.render())):
        pd, rel = discover_path(coll, path, cfg, memo)
        found.append(pd)
        log.debug("%s: %d rows, %d/%d/%d candidates", path, pd.rows,
                  len(pd.without_heuristics), len(pd.with_threshold), len(pd.final))
        if dump_dir:
            name = f"relation-{i:03d}.csv"
            with open(dump_dir / name, "w", newline="", encoding="utf-8") as fp:
                write_relation_csv(rel, fp)
            index_lines.append(f"{name},{json.dumps(path.render())}")
    if dump_dir:
        (dump_dir / "index.csv").write_text("\n".join(index_lines) + "\n", encoding="utf-8")

    groups: list[TaggedUnionGroup] = [g for pd in found for g in pd.groups]
    T = nest_groups_into_T(groups, config.encoding)
    composite = compose(S, T)

    invalid = []
    valid = None
    if config.validate:
        for i, doc in enumerate(coll.documents):
            if not validate(doc, composite):
                invalid.append(i)
        valid = not invalid

    s_lines, t_lines = line_count(S), line_count(T)
    report = ExtractionReport(
        dataset=config.name,
        loc_D=coll.loc,
        loc_S=s_lines,
        loc_T=t_lines,
        ratio_T=round(ratio_t(s_lines, t_lines), 6),
        cfds_without_heuristics=sum(len(pd.without_heuristics) for pd in found),
        cfds_with_threshold=sum(len(pd.with_threshold) for pd in found),
        cfds_with_threshold_and_heuristics=sum(len(g.cases) for g in groups),
        dependencies_after_heuristics=sum(len(pd.final) for pd in found),
        valid=valid,
        threshold=config.threshold,
        threshold_mode=config.threshold_mode,
        max_depth=config.max_depth,
        encoding=config.encoding,
        seconds=round(time.perf_counter() - start, 3),
    )
    return PipelineResult(S, T, composite, groups, report, found, invalid)


def threshold_dirname(threshold: float, mode: str) -> str:
    if mode == "relative":
        return f"threshold-{threshold * 100:g}"
    return f"threshold-abs-{threshold:g}"


def write_outputs(result: PipelineResult, outdir) -> dict:
    outdir = Path(outdir)
    files = write_schema_files(result.S, result.T, outdir)
    report_path = outdir / "report.json"
    report_path.write_text(emit_report(result.report) + "\n", encoding="utf-8")
    files["report.json"] = report_path
    return files


_COLUMNS = [
    ("Dataset", "dataset", "{}"),
    ("|D|", "loc_D", "{}"),
    ("|S|", "loc_S", "{}"),
    ("pi_min", "threshold", None),
    ("|T|", "loc_T", "{}"),
    ("RatioT", "ratio_T", "{:.1%}"),
    ("CFDs w/o H", "cfds_without_heuristics", "{}"),
    ("w/ pi_min", "cfds_with_threshold", "{}"),
    ("w/ pi_min+H", "cfds_with_threshold_and_heuristics", "{}"),
    ("Valid", "valid", None),
]


def _cell(report: ExtractionReport, key: str, fmt) -> str:
    value = getattr(report, key)
    if key == "threshold":
        return f"{value:.0%}" if report.threshold_mode == "relative" else f"{value:g}"
    if key == "valid":
        return {True: "yes", False: "NO", None: "-"}[value]
    return fmt.format(value)


def emit_report(report, fmt: str = "json") -> str:
    """Render one report (or a list of them) as JSON or as a fixed-width summary table."""
    reports = report if isinstance(report, list) else [report]
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        return dumps(payload if isinstance(report, list) else payload[0])
    if fmt != "table":
        raise ValueError(f"unknown report format {fmt!r}")
    rows = [[h for h, _, _ in _COLUMNS]]
    rows += [[_cell(r, key, fmt_) for _, key, fmt_ in _COLUMNS] for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(_COLUMNS))]
    lines = []
    for n, row in enumerate(rows):
        lines.append("  ".join(c.ljust(w) if i == 0 else c.rjust(w)
                               for i, (c, w) in enumerate(zip(row, widths))))
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)
