import functools

import pytest

from mincodes import build_field


@functools.lru_cache(maxsize=None)
def field(m, poly=None):
    return build_field(m, poly)


@pytest.fixture
def gf():
    return field


# acceptance summary: tests carry @pytest.mark.criterion(n); a criterion passes
# only if every test tagged with it passed (an xfail counts as a failure).

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when != "call" and not (rep.when == "setup" and rep.outcome != "passed"):
        return
    n = mark.args[0]
    ok = rep.outcome == "passed" and not hasattr(rep, "wasxfail")
    detail = dict(item.user_properties).get("detail", "")
    if hasattr(rep, "wasxfail"):
        detail = rep.wasxfail or detail
    elif rep.failed:
        crash = getattr(rep.longrepr, "reprcrash", None)
        detail = crash.message.splitlines()[0] if crash else "failed"
    entry = _RESULTS.setdefault(n, [])
    entry.append((item.name, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_RESULTS):
        tests = _RESULTS[n]
        ok = all(t[1] for t in tests)
        notes = "; ".join(f"{name}: {d}" for name, good, d in tests if d and (not good or not ok))
        if not notes:
            notes = "; ".join(dict.fromkeys(d for _, _, d in tests if d))
        tr.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}: {notes}")
