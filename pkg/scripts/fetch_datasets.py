"""Download the public benchmark datasets used by acceptance criterion 5.

    python3 scripts/fetch_datasets.py [DEST]

DEST defaults to ./datasets; point TAGUNION_DATASETS at it if you choose
another directory. Files that already exist are left alone.
"""

import sys
import urllib.request
from pathlib import Path

BASE = "https://raw.githubusercontent.com/sdbs-uni-p/schema-inference-repro/main/artifacts/input/"

FILES = {
    "wija_Germany.json": "wija/wija_Germany.json",
    "AtelierCartographie_EU.json": "AtelierCartographie/AtelierCartographie_EU.json",
    "reinterpretcat_berlin.osm.json": "reinterpretcat/reinterpretcat_berlin.osm.json",
    "stenson_members.json": "stenson/stenson_members.json",
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    dest = Path(argv[0] if argv else Path(__file__).resolve().parents[1] / "datasets")
    dest.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name, rel in FILES.items():
        target = dest / name
        if target.exists():
            print(f"have   {target}")
            continue
        try:
            with urllib.request.urlopen(BASE + rel, timeout=60) as resp:
                data = resp.read()
        except OSError as exc:
            print(f"failed {name}: {exc}", file=sys.stderr)
            failed += 1
            continue
        tmp = target.with_suffix(".part")
        tmp.write_bytes(data)
        tmp.rename(target)
        print(f"fetched {target} ({len(data)} bytes)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
