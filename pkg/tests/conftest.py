import pytest

from picard import catalog

# criterion number -> (title, "PASS" | "FAIL"), filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, status = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {title}")


@pytest.fixture(params=catalog.module_names())
def module_name(request):
    return request.param


@pytest.fixture(params=catalog.hom_names())
def hom_name(request):
    return request.param
