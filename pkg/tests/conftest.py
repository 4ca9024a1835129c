import pytest

# criterion number -> (title, list of (test id, outcome))
_results: dict[int, tuple[str, list[tuple[str, str]]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _results.setdefault(number, (title, []))[1].append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, runs = _results[number]
        failed = [name for name, outcome in runs if outcome != "passed"]
        status = "FAIL" if failed else "PASS"
        line = f"criterion {number:>2} {status}  {title}"
        if failed:
            line += f"  (failed: {', '.join(failed)})"
        terminalreporter.write_line(line)
