import pytest

from trusslab import enumeration as en

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def brace_like_upto3():
    return [T for n in (1, 2, 3) for T in en.enum_brace_like(n)]


@pytest.fixture(scope="session")
def almost_upto4():
    return [A for n in (1, 2, 3, 4) for A in en.enum_almost(n)]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
