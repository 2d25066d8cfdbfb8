import pytest

from multautomata import BOOLEAN, INTEGER, NATURAL, RATIONAL, TROPICAL, zmod

ALL_SEMIRINGS = [BOOLEAN, NATURAL, INTEGER, RATIONAL, zmod(2), zmod(5), TROPICAL]
FIELDS = [RATIONAL, zmod(5)]


@pytest.fixture(params=ALL_SEMIRINGS, ids=lambda sr: sr.tag)
def semiring(request):
    return request.param


@pytest.fixture(params=FIELDS, ids=lambda sr: sr.tag)
def field_sr(request):
    return request.param


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
