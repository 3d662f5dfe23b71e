import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_runtest_makereport(item, call):
    if call.when != "call" or not item.nodeid.startswith("tests/test_acceptance.py"):
        return
    name = item.name
    detail = getattr(item.module, "DETAILS", {}).get(name, "")
    ACCEPTANCE[name] = (call.excinfo is None, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in ACCEPTANCE.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
