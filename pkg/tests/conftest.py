import pytest

# (criterion, passed, detail) lines from test_acceptance, echoed after the run
ACCEPTANCE = []


@pytest.fixture
def report():
    def _report(criterion, ok, detail=""):
        ACCEPTANCE.append((criterion, bool(ok), detail))
        return ok
    return _report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
