import itertools

import pytest
from hypothesis import settings, strategies as st

from cycloids import CycloidParams

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def params_strategy(max_value=6):
    v = st.integers(min_value=1, max_value=max_value)
    return st.builds(CycloidParams, v, v, v, v)


def points(bound=40):
    c = st.integers(min_value=-bound, max_value=bound)
    return st.tuples(c, c)


def box(max_value):
    return [CycloidParams(*v) for v in itertools.product(range(1, max_value + 1), repeat=4)]


def brute_witness(params, x1, x2, window):
    """Independent equivalence oracle: scan every (m, n) in the window."""
    dx, dy = x2[0] - x1[0], x2[1] - x1[1]
    a, b, g, d = params.as_tuple()
    for m in range(-window, window + 1):
        for n in range(-window, window + 1):
            if m * a + n * g == dx and -m * b + n * d == dy:
                return (m, n)
    return None


# --- acceptance summary ---------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    item_marks = getattr(report, "criterion", None)
    if item_marks is None:
        return
    number, title = item_marks
    previous = _criteria.get(number, (title, "PASS"))[1]
    status = "PASS" if report.outcome == "passed" and previous == "PASS" else "FAIL"
    _criteria[number] = (title, status)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2} {status}  {title}")
