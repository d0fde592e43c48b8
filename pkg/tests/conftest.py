import pytest

from loopforge import kernels, structure

_acceptance = {}


def pytest_runtest_logreport(report):
    label = dict(report.user_properties).get("acceptance")
    if label is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        detail = dict(report.user_properties).get("detail", "")
        _acceptance[label] = (report.outcome, detail)


@pytest.fixture(autouse=True)
def _tag_acceptance(request):
    marker = request.node.get_closest_marker("acceptance")
    if marker is not None:
        request.node.user_properties.append(("acceptance", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(s.lstrip("AC"))):
        outcome, detail = _acceptance[label]
        word = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{label}: {word}  {detail}".rstrip())


def clear_caches():
    """Drop memoised groups so timings measure fresh computation."""
    for name in ("mlt", "rmlt", "lmlt", "inner_generators", "_inner_stack", "_assoc_mask"):
        getattr(structure, name).cache_clear()


@pytest.fixture
def fresh():
    clear_caches()
    yield
    clear_caches()


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request, monkeypatch):
    """Run the test with every kernel bound to one backend."""
    mod = kernels.backends()[request.param]
    for name in kernels.NAMES:
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    clear_caches()
    yield request.param
    clear_caches()
