from __future__ import annotations

import pytest

from hermcode.field import make_field

_ACCEPTANCE: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def f4():
    return make_field(2)


@pytest.fixture(params=[2, 3, 4], ids=lambda q: f"q{q}")
def base_field(request):
    return make_field(request.param)
