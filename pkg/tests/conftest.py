import pytest

from factorlab import _pykernels
from factorlab._backend import COMPILED, kernels

_OUTCOMES: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label, title = mark.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        verdict = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _OUTCOMES[label] = (verdict, title)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_OUTCOMES, key=lambda s: int(s.lstrip("AC"))):
        verdict, title = _OUTCOMES[label]
        terminalreporter.write_line(f"{label:<5} {verdict}  {title}")


BACKENDS = [pytest.param(_pykernels, id="pure")]
if COMPILED:
    BACKENDS.insert(0, pytest.param(kernels, id="compiled"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param
