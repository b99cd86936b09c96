import pytest

from pfafflab.reps import standard_module, tensor_module


@pytest.fixture(scope="session")
def o5_modules():
    return {sh: (standard_module(5) if sh == (1,) else tensor_module(5, sh))
            for sh in [(1,), (1, 1), (2,), (2, 1), (2, 2), (3,), (3, 1)]}


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[k]
        terminalreporter.write_line("criterion %2d: %s  %s" % (k, "PASS" if ok else "FAIL", text))
