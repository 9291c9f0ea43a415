import pytest

from ternalg.superspace import MetricSignature, SuperspaceConfig, build

# one line per acceptance criterion, shown after the test run
ACCEPTANCE_LINES = []


def record_criterion(number: int, title: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    ACCEPTANCE_LINES.append(f"criterion {number:2d} [{status}] {title}{suffix}")
    assert ok, f"criterion {number}: {title}{suffix}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def alg2():
    return build(SuperspaceConfig(metric=MetricSignature.minkowski(2)))


@pytest.fixture(scope="session")
def alg4():
    return build(SuperspaceConfig(metric=MetricSignature.minkowski(4)))
