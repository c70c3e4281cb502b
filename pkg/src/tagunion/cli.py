"""Command line entry point.

Exit codes: 0 success, 1 validation failure, 2 usage or configuration error,
3 input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .baseline import SchemaLoadError
from .emitter import ENCODINGS
from .encoding import DEFAULT_MAX_DEPTH
from .heuristics import DEFAULT_THRESHOLD, ConfigError
from .jsoncore import MODES, JsonSyntaxError, parse_documents
from .pipeline import PipelineConfig, emit_report, run_pipeline, threshold_dirname, write_outputs

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tagunion",
        description="Extract a JSON Schema with tagged unions (if-then-else) from JSON documents.",
    )
    p.add_argument("inputs", nargs="+", help="JSON files, or - for standard input")
    p.add_argument("--mode", choices=MODES, default="single",
                   help="single: one document per file; ndjson: one per line; "
                        "array: the top-level array holds the documents")
    p.add_argument("--threshold", type=float, nargs="+", default=[DEFAULT_THRESHOLD],
                   help="minimum support; several values run a threshold grid")
    p.add_argument("--threshold-mode", choices=("relative", "absolute"), default="relative")
    p.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH,
                   help="deepest subschema relaxation level k")
    p.add_argument("--encoding", choices=ENCODINGS, default="ite")
    p.add_argument("--baseline", default="internal",
                   help="'internal' or the path of an externally extracted schema S")
    p.add_argument("--validate", action="store_true",
                   help="validate every document against the composite schema")
    p.add_argument("--report", choices=("json", "table"), default="table")
    p.add_argument("--dump-relations", metavar="DIR",
                   help="write each path's relational encoding as CSV")
    p.add_argument("-o", "--output-dir", default="tagunion-output")
    p.add_argument("--name", help="dataset name used in the report")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _read_inputs(names: list[str]) -> list[bytes]:
    out = []
    for name in names:
        out.append(sys.stdin.buffer.read() if name == "-" else Path(name).read_bytes())
    return out


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    name = args.name or Path(args.inputs[0]).stem

    try:
        configs = [
            PipelineConfig(
                threshold=t,
                threshold_mode=args.threshold_mode,
                max_depth=args.max_depth,
                encoding=args.encoding,
                baseline=args.baseline,
                validate=args.validate,
                dump_relations=args.dump_relations,
                name=name,
            )
            for t in args.threshold
        ]
    except ConfigError as exc:
        print(f"tagunion: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        coll = parse_documents(_read_inputs(args.inputs), args.mode)
        if not len(coll):
            raise ValueError("no documents in input")
    except (OSError, JsonSyntaxError, ValueError) as exc:
        print(f"tagunion: {exc}", file=sys.stderr)
        return EXIT_INPUT

    outdir = Path(args.output_dir)
    reports = []
    failed = False
    for cfg in configs:
        target = outdir if len(configs) == 1 else outdir / threshold_dirname(cfg.threshold, cfg.threshold_mode)
        try:
            result = run_pipeline(coll, cfg)
            write_outputs(result, target)
        except SchemaLoadError as exc:
            print(f"tagunion: baseline schema: {exc}", file=sys.stderr)
            return EXIT_INPUT
        except OSError as exc:
            print(f"tagunion: {exc}", file=sys.stderr)
            return EXIT_INPUT
        reports.append(result.report)
        if result.invalid_documents:
            failed = True
            print(f"tagunion: {len(result.invalid_documents)} document(s) do not validate "
                  f"at threshold {cfg.threshold:g}", file=sys.stderr)

    print(emit_report(reports if len(reports) > 1 else reports[0], args.report))
    return EXIT_INVALID if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
