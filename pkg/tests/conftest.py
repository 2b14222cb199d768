import pytest

from farey_surgery import _pycore

try:
    from farey_surgery import _core
except ImportError:
    _core = None

BACKENDS = [_pycore] + ([_core] if _core is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def core(request):
    """Each available kernel backend in turn."""
    return request.param


BASE = (0, 1, 1, 1, 1, 0)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
