import re

import pytest

_AC_RESULTS: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = re.match(r"test_ac(\d+)_", item.name)
    if m and rep.when == "call":
        detail = dict(item.user_properties).get("detail", "")
        status = "PASS" if rep.passed else "FAIL"
        _AC_RESULTS[int(m.group(1))] = (status, detail if rep.passed else rep.longreprtext.splitlines()[-1])


def pytest_terminal_summary(terminalreporter):
    if not _AC_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_AC_RESULTS):
        status, detail = _AC_RESULTS[k]
        terminalreporter.write_line(f"AC-{k}: {status}  {detail}")
