import io
import json
import subprocess
import sys

import pytest

from tagunion import fixtures
from tagunion.cli import main
from tagunion.emitter import line_count, nest_groups_into_T
from tagunion.jsoncore import parse_documents, pretty_line_count
from tagunion.pipeline import PipelineConfig, emit_report, run_pipeline, threshold_dirname

REPORT_KEYS = {
    "dataset", "loc_D", "loc_S", "loc_T", "ratio_T", "cfds_without_heuristics",
    "cfds_with_threshold", "cfds_with_threshold_and_heuristics",
    "dependencies_after_heuristics", "valid", "threshold", "threshold_mode",
    "max_depth", "encoding", "seconds",
}


@pytest.fixture
def geometries_file(tmp_path):
    path = tmp_path / "geometries.json"
    path.write_text(fixtures.read_text("geometries.json"))
    return path


def run_cli(*args):
    return main([str(a) for a in args])


def test_geometries_pipeline_counts():
    result = run_pipeline(fixtures.load("geometries"))
    r = result.report
    assert (r.cfds_without_heuristics, r.cfds_with_threshold, r.cfds_with_threshold_and_heuristics) == (3, 3, 2)
    assert r.valid is True
    assert r.loc_D == sum(pretty_line_count(d) for d in fixtures.load("geometries").documents)
    assert r.loc_T == line_count(result.T)
    assert result.T == nest_groups_into_T(result.groups)


def test_empty_collection_is_rejected():
    with pytest.raises(ValueError):
        run_pipeline(parse_documents("[]", mode="array"))


def test_cli_writes_schema_files_and_report(tmp_path, geometries_file, capsys):
    out = tmp_path / "out"
    assert run_cli(geometries_file, "-o", out, "--validate", "--report", "json") == 0
    assert sorted(p.name for p in out.iterdir()) == [
        "report.json", "schema-S.json", "schema-T.json", "schema-ite.json"
    ]
    report = json.loads((out / "report.json").read_text())
    assert set(report) == REPORT_KEYS
    assert report["dataset"] == "geometries" and report["valid"] is True
    assert json.loads(capsys.readouterr().out) == report


def test_table_report_has_one_row_per_threshold(tmp_path, geometries_file, capsys):
    assert run_cli(geometries_file, "-o", tmp_path, "--threshold", "0.5", "0.35", "0.15") == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split()[:3] == ["Dataset", "|D|", "|S|"]
    assert len(lines) == 2 + 3
    assert [l.split()[3] for l in lines[2:]] == ["50%", "35%", "15%"]
    for t in (0.5, 0.35, 0.15):
        assert (tmp_path / threshold_dirname(t, "relative") / "schema-ite.json").exists()


def test_threshold_dirnames():
    assert threshold_dirname(0.15, "relative") == "threshold-15"
    assert threshold_dirname(3, "absolute") == "threshold-abs-3"


def test_outputs_are_byte_identical_across_runs(tmp_path, geometries_file):
    for name in ("a", "b"):
        assert run_cli(geometries_file, "-o", tmp_path / name, "--report", "json") == 0
    for f in ("schema-S.json", "schema-T.json", "schema-ite.json"):
        assert (tmp_path / "a" / f).read_bytes() == (tmp_path / "b" / f).read_bytes()
    ra, rb = (json.loads((tmp_path / n / "report.json").read_text()) for n in ("a", "b"))
    ra.pop("seconds"), rb.pop("seconds")
    assert ra == rb


def test_validation_failure_exits_one(tmp_path, geometries_file, capsys):
    baseline = tmp_path / "S.json"
    baseline.write_text('{"type": "string"}')
    code = run_cli(geometries_file, "-o", tmp_path / "out", "--baseline", baseline, "--validate")
    assert code == 1
    assert "do not validate" in capsys.readouterr().err


def test_external_baseline_is_used_verbatim(tmp_path, geometries_file):
    baseline = tmp_path / "S.json"
    baseline.write_text(fixtures.read_text("geometries_union.json"))
    assert run_cli(geometries_file, "-o", tmp_path / "out", "--baseline", baseline, "--validate") == 0
    composite = json.loads((tmp_path / "out" / "schema-ite.json").read_text())
    assert composite["allOf"][0] == json.loads(fixtures.read_text("geometries_union.json"))


@pytest.mark.parametrize("args", [["--threshold", "0"], ["--threshold", "2"], ["--max-depth", "0"],
                                  ["--threshold-mode", "absolute", "--threshold", "0.5"]])
def test_bad_configuration_exits_two(geometries_file, tmp_path, args):
    assert run_cli(geometries_file, "-o", tmp_path, *args) == 2


def test_unknown_flag_exits_two(geometries_file):
    with pytest.raises(SystemExit) as exc:
        run_cli(geometries_file, "--encoding", "oneOf")
    assert exc.value.code == 2


def test_input_errors_exit_three(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"a": 1,}')
    assert run_cli(bad, "-o", tmp_path) == 3
    assert run_cli(tmp_path / "missing.json", "-o", tmp_path) == 3
    empty = tmp_path / "empty.json"
    empty.write_text("[]")
    assert run_cli(empty, "--mode", "array", "-o", tmp_path) == 3
    baseline = tmp_path / "S.json"
    baseline.write_text("[1]")
    good = tmp_path / "good.json"
    good.write_text("{}")
    assert run_cli(good, "--baseline", baseline, "-o", tmp_path) == 3


def test_ndjson_from_stdin(tmp_path, monkeypatch, capsys):
    lines = "\n".join(json.dumps(g) for g in json.loads(fixtures.read_text("geometries.json"))["geometries"])
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(lines.encode())))
    assert run_cli("-", "--mode", "ndjson", "-o", tmp_path, "--name", "geoms", "--report", "json") == 0
    report = json.loads(capsys.readouterr().out)
    assert report["dataset"] == "geoms"
    assert report["cfds_with_threshold_and_heuristics"] == 2


def test_dump_relations(tmp_path, geometries_file):
    dump = tmp_path / "rel"
    assert run_cli(geometries_file, "-o", tmp_path / "out", "--dump-relations", dump) == 0
    index = (dump / "index.csv").read_text().splitlines()
    assert index[0] == "file,path"
    paths = {line.split(",", 1)[1] for line in index[1:]}
    assert paths == {'""', '"/geometries[*]"'}
    geometries = next(l.split(",")[0] for l in index[1:] if "geometries" in l)
    header = (dump / geometries).read_text().splitlines()[0]
    assert header.startswith("O.id,type.value,type.type@1")


def test_anyof_encoding(tmp_path, geometries_file):
    assert run_cli(geometries_file, "-o", tmp_path, "--encoding", "anyof", "--validate") == 0
    T = json.loads((tmp_path / "schema-T.json").read_text())
    assert T == {"properties": {"geometries": {"items": json.loads(fixtures.read_text("geometries_anyof.json"))}}}


def test_report_rendering_rejects_unknown_format():
    result = run_pipeline(fixtures.load("geometries"), PipelineConfig(validate=False))
    assert "-" in emit_report(result.report, "table").splitlines()[2].split()
    with pytest.raises(ValueError):
        emit_report(result.report, "xml")


def test_module_entry_point(tmp_path, geometries_file):
    proc = subprocess.run([sys.executable, "-m", "tagunion", str(geometries_file), "-o", str(tmp_path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "geometries" in proc.stdout


def test_anyof_rejects_tag_values_pruned_by_the_threshold():
    coll = fixtures.load("geo_features")
    ite = run_pipeline(coll, PipelineConfig(threshold=0.35))
    anyof = run_pipeline(coll, PipelineConfig(threshold=0.35, encoding="anyof"))
    assert [c.constant.value for g in anyof.groups for c in g.cases] == ["Point"]
    assert ite.report.valid is True
    assert anyof.report.valid is False
