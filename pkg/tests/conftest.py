import pytest

_LINES = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def acceptance(request):
    lines = request.config.stash.setdefault(_LINES, [])

    def record(number, name, passed, elapsed=None):
        timing = f" ({elapsed:.3f}s)" if elapsed is not None else ""
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {name}{timing}"
        lines.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
