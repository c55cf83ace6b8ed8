import pytest
from hypothesis import settings

# exact arithmetic and sympy oracles have uneven timings
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

_OUTCOMES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    key = mark.args
    failed = rep.failed or (rep.when == "call" and rep.skipped)
    if failed:
        _OUTCOMES[key] = "FAIL"
    elif rep.when == "call":
        _OUTCOMES.setdefault(key, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for (num, title), verdict in sorted(_OUTCOMES.items()):
        tr.write_line(f"criterion {num:2d} {verdict}  {title}")
    npass = sum(v == "PASS" for v in _OUTCOMES.values())
    tr.write_line(f"{npass}/{len(_OUTCOMES)} criteria passed")
