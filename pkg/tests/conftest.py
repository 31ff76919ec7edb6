import pytest

from bipinfluence import build_bipartite, builtin_southern_women


@pytest.fixture
def triangle_graph():
    """Actors 1-3, events a and c: a is attended by all, c by 2 and 3."""
    return build_bipartite([(1, "a"), (2, "a"), (3, "a"), (2, "c"), (3, "c")])


@pytest.fixture(scope="session")
def southern_women():
    return builtin_southern_women()


# one summary line per acceptance criterion

_RESULTS: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    name = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.skipped):
        status = "PASS" if report.passed else "SKIP" if report.skipped else "FAIL"
        if status == "SKIP" and isinstance(report.longrepr, tuple):
            status += f" ({report.longrepr[2]})"
        _RESULTS[name] = status


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_RESULTS, key=lambda n: int(n.split()[0].lstrip("C"))):
        terminalreporter.write_line(f"{_RESULTS[name]:<6} {name}")
