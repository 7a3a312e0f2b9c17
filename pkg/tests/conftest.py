import pytest

# criterion number -> (title, passed); filled by tests/test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary table."""
    def record(number, title):
        ACCEPTANCE[number] = (title, False)
        request.node.user_properties.append(("criterion", number))
        return number
    yield record
    for key, value in request.node.user_properties:
        if key == "criterion":
            title, _ = ACCEPTANCE[value]
            ACCEPTANCE[value] = (title, not getattr(request.node, "_failed", False))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and rep.failed:
        item._failed = True


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}")
