import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypersg import kernels  # noqa: E402

BACKENDS = ["pure"] + (["compiled"] if kernels.compiled_available() else [])

_acceptance_lines = []


@pytest.fixture(params=BACKENDS)
def backend(request):
    return kernels.backend_module(request.param)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        _acceptance_lines.append(f"{status}  criterion {marker.args[0]}: {marker.kwargs.get('title', item.name)}")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)
