"""Per-criterion outcomes for the acceptance suite, summarised by conftest."""

from contextlib import contextmanager

import pytest

RESULTS: dict = {}
TITLES: dict = {}
NOTES: dict = {}

_RANK = {"FAIL": 2, "PASS": 1, "SKIP": 0}


def _record(number: int, status: str) -> None:
    old = RESULTS.get(number)
    if old is None or _RANK[status] > _RANK[old]:
        RESULTS[number] = status


def note(number: int, text: str) -> None:
    NOTES.setdefault(number, []).append(text)


@contextmanager
def criterion(number: int, title: str):
    """Attribute the enclosed block's outcome to an acceptance criterion.

    A criterion spread over several tests passes only if none of them fails.
    """
    TITLES[number] = title
    try:
        yield
    except pytest.skip.Exception as exc:
        _record(number, "SKIP")
        note(number, str(exc))
        raise
    except BaseException:
        _record(number, "FAIL")
        raise
    _record(number, "PASS")


def summary_lines() -> list[str]:
    lines = []
    for n in sorted(TITLES):
        lines.append(f"criterion {n}: {RESULTS.get(n, 'FAIL')}  {TITLES[n]}")
        for text in NOTES.get(n, []):
            lines.append(f"    {text}")
    return lines
