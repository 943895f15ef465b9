import pytest
from hypothesis import settings

# numba compiles kernels on first call, so per-example deadlines are noise
settings.register_profile("default", deadline=None)
settings.load_profile("default")

_CRITERIA = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_CRITERIA] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    props = dict(item.user_properties)
    if rep.passed:
        status = props.get("status", "PASS")
        detail = props.get("detail", "")
    else:
        status = "FAIL"
        crash = getattr(rep.longrepr, "reprcrash", None)
        detail = (crash.message if crash else str(rep.longrepr)).splitlines()[0]
    item.config.stash[_CRITERIA][marker.args[0]] = f"criterion {marker.args[0]:2d}: {status} | {detail}"


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[_CRITERIA]
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
