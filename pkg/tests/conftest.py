import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number: int, ok: bool, seconds: float, limit: float, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        line = f"criterion {number}: {status}  {seconds:7.2f}s (limit {limit:g}s)  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record
