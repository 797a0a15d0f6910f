import pytest

_ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Register the running test under an acceptance criterion; tests
    sharing a number are merged into one line."""

    def mark(number, title):
        _ACCEPTANCE[request.node.nodeid] = (number, title)

    return mark


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.nodeid in _ACCEPTANCE:
        number, title = _ACCEPTANCE[item.nodeid]
        _ACCEPTANCE[item.nodeid] = (number, title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    merged = {}
    for v in _ACCEPTANCE.values():
        if len(v) == 3:
            number, title, verdict = v
            old = merged.get(number, (title, "PASS"))[1]
            merged[number] = (title, "FAIL" if "FAIL" in (old, verdict) else "PASS")
    if not merged:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(merged):
        title, verdict = merged[number]
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
