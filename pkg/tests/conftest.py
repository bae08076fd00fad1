import pytest

_results = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    elapsed = getattr(item, "criterion_elapsed", None)
    detail = f"{elapsed:.2f}s" if elapsed is not None else ""
    if call.excinfo is not None:
        reason = str(call.excinfo.value).splitlines()[0] if str(call.excinfo.value) else call.excinfo.typename
        _results[number] = ("FAIL", title, reason)
    else:
        _results[number] = ("PASS", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        status, title, detail = _results[number]
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title} ({detail})")


@pytest.fixture
def stopwatch(request):
    import time

    class Stopwatch:
        def __init__(self):
            self.start = time.perf_counter()

        @property
        def elapsed(self):
            return time.perf_counter() - self.start

        def check(self, limit):
            elapsed = self.elapsed
            request.node.criterion_elapsed = elapsed
            assert elapsed < limit, f"runtime {elapsed:.2f}s exceeds {limit}s"

    return Stopwatch()
