import pytest

_criteria: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record an acceptance criterion's outcome for the end-of-run summary."""

    class Recorder:
        def __init__(self):
            self.label = None
            self.detail = ""

        def __call__(self, label, detail=""):
            self.label = label
            self.detail = detail

    rec = Recorder()
    yield rec
    if rec.label is not None:
        call = getattr(request.node, "rep_call", None)
        passed = call is not None and call.passed
        _criteria[rec.label] = (passed, rec.detail)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[0].rstrip("."))):
        passed, detail = _criteria[label]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {label}" + (f" -- {detail}" if detail else ""))
