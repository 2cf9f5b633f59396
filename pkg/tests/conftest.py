import pytest

_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance criterion under the test's marker label."""
    label = request.node.get_closest_marker("criterion").args[0]
    _CRITERIA[label] = ("FAIL", "did not finish")

    def record(ok, detail=""):
        _CRITERIA[label] = ("PASS" if ok else "FAIL", detail)
        return ok

    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: int(s.split(".")[0])):
        status, detail = _CRITERIA[label]
        terminalreporter.write_line(f"{status}  {label}" + (f"  ({detail})" if detail else ""))
