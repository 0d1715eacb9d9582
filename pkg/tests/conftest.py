from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=60)
settings.load_profile("default")

import pytest

_verdicts = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.skipped:
        return
    num, title = mark.args
    if rep.when == "call" or rep.failed:
        prev = _verdicts.get(num, (title, True, 0.0))
        _verdicts[num] = (title, prev[1] and rep.passed, prev[2] + rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_verdicts):
        title, ok, secs = _verdicts[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {title} ({secs:.1f}s)")
