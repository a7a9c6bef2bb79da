_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            n, title = mark.args
            _criteria.setdefault(n, {"title": title, "ok": True, "ran": False, "ids": set()})
            _criteria[n]["ids"].add(item.nodeid)


def pytest_runtest_logreport(report):
    for entry in _criteria.values():
        if report.nodeid in entry["ids"]:
            if report.when == "call":
                entry["ran"] = True
            if report.failed:
                entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        entry = _criteria[n]
        if not entry["ok"]:
            status = "FAIL"
        else:
            status = "PASS" if entry["ran"] else "not run"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {entry['title']}")
