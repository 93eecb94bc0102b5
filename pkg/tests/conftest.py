import pytest

ACCEPTANCE_RESULTS: dict[str, tuple[bool, float, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""
    name = request.node.name
    info = {"elapsed": 0.0, "note": ""}
    yield info
    rep = getattr(request.node, "rep_call", None)
    passed = rep is not None and rep.passed
    ACCEPTANCE_RESULTS[name] = (passed, info["elapsed"], info["note"])


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, elapsed, note) in sorted(ACCEPTANCE_RESULTS.items()):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status} {name} ({elapsed:.2f}s) {note}".rstrip())
