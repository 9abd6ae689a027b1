import pytest

_verdicts = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and (rep.when == "call" or rep.failed):
        doc = (item.function.__doc__ or item.name).strip()
        _verdicts[doc] = _verdicts.get(doc, True) and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for doc, ok in _verdicts.items():
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {doc}")
