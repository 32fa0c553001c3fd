from functools import lru_cache

import pytest

from whiteman6.sequence import make_setting

IDENTITY_SETS = [(7, 13), (13, 7), (13, 19), (19, 13)]


@lru_cache(maxsize=None)
def cached_setting(n1, n2, q):
    return make_setting(n1, n2, q)


@pytest.fixture
def setting():
    return cached_setting


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, detail = RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
