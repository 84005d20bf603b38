import pytest
from hypothesis import HealthCheck, settings

from waringhf.liaison import RandomConfig
from waringhf.pipelines import run_example1, run_example2
from waringhf.scalars import GF

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, title = mark.args
    if rep.failed:
        _criteria[n] = ("FAIL", title)
    elif rep.when == "call":
        _criteria.setdefault(n, ("PASS", title))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status, title = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")


@pytest.fixture(scope="session")
def example1_report():
    return run_example1(RandomConfig(0), GF(32003))


@pytest.fixture(scope="session")
def example2_report():
    return run_example2(RandomConfig(0), GF(32003))
