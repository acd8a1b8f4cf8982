import pytest

# Acceptance tests append (criterion, passed, detail) here; printed at the end.
ACCEPTANCE_RESULTS = []


def record(criterion, passed, detail=""):
    ACCEPTANCE_RESULTS.append((criterion, passed, detail))


@pytest.fixture
def acceptance_record():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {criterion:>2}: {status}  {detail}")
