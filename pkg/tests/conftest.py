import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from ecbound.corpus import bundled_corpus

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def _jsonl(name):
    with open(FIXTURES / name) as fh:
        return [json.loads(line) for line in fh if line.strip()]


@pytest.fixture(scope="session")
def local_fixtures():
    return _jsonl("local_reduction.jsonl")


@pytest.fixture(scope="session")
def minimal_fixtures():
    return _jsonl("minimal_models.jsonl")


@pytest.fixture(scope="session")
def corpus():
    return {r.label: r for r in bundled_corpus()}


# one PASS/FAIL line per acceptance criterion, printed in the terminal summary
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    n, text = m.args
    if rep.when == "call" or rep.failed:
        prev = _CRITERIA.get(n, (text, "PASS"))[1]
        status = "FAIL" if rep.failed or prev == "FAIL" else "PASS"
        _CRITERIA[n] = (text, status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        text, status = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:>2} {status}: {text}")
