import pytest

_ACCEPTANCE: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    crit = item.get_closest_marker("criterion")
    if crit is None:
        return
    key = f"{crit.args[0]}. {crit.args[1]}"
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        prev = _ACCEPTANCE.get(key, "PASS")
        _ACCEPTANCE[key] = "PASS" if prev == "PASS" and rep.passed else "FAIL"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k.split(".")[0])):
        terminalreporter.write_line(f"{_ACCEPTANCE[key]}  criterion {key}")
