import contextlib

import pytest

from helpers import CORPUS, from_nx

_ACCEPTANCE = {}


@pytest.fixture
def bowtie():
    return from_nx(CORPUS["bowtie"][0])


@pytest.fixture
def criterion():
    """``with criterion(n, title): ...`` records PASS/FAIL for the summary."""

    @contextlib.contextmanager
    def record(number, title):
        detail = {"note": ""}
        try:
            yield detail
        except BaseException as exc:
            msg = str(exc).strip().splitlines()[0] if str(exc).strip() else type(exc).__name__
            _ACCEPTANCE[number] = ("FAIL", title, msg[:160])
            print(f"criterion {number}: FAIL {title} ({msg[:160]})")
            raise
        _ACCEPTANCE[number] = ("PASS", title, detail["note"])
        print(f"criterion {number}: PASS {title} {detail['note']}".rstrip())

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, note = _ACCEPTANCE[number]
        line = f"[{status}] {number:>2}. {title}"
        terminalreporter.write_line(f"{line}  ({note})" if note else line)
