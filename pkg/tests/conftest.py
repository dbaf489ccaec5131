import os
import sys

import pytest
from hypothesis import settings

from parlcs import _backend

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


@pytest.fixture(params=sorted(_backend.BACKENDS))
def backend(request):
    previous = _backend.use(request.param)
    yield request.param
    _backend.use(previous)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "skipped"):
        for report in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(report, "user_properties", []))
            if "criterion" in props and report.when in ("call", "setup"):
                if outcome == "passed" and report.when != "call":
                    continue
                detail = props.get("detail", "")
                if outcome == "skipped" and isinstance(report.longrepr, tuple):
                    detail = report.longrepr[2]
                lines.append((props["criterion"], outcome.upper(), detail))
    if lines:
        terminalreporter.section("acceptance criteria")
        for criterion, outcome, detail in sorted(lines):
            terminalreporter.write_line(f"criterion {criterion}: {outcome}  {detail}")
