import contextlib

import pytest

_CRITERIA: dict[int, str] = {}


@contextlib.contextmanager
def _criterion(number: int, title: str):
    """Record one acceptance criterion as PASS/FAIL; failures still propagate."""
    try:
        yield
    except BaseException as exc:
        line = f"criterion {number}: FAIL  {title}  ({type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''})"
        _CRITERIA[number] = line
        print(line)
        raise
    line = f"criterion {number}: PASS  {title}"
    _CRITERIA[number] = line
    print(line)


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[n])
