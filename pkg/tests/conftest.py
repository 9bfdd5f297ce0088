from functools import lru_cache

import pytest

from frobkernel import DistAlgebra
from frobkernel.verify import Context


@lru_cache(maxsize=None)
def algebra(m: int, n: int, p: int, r: int = 1) -> DistAlgebra:
    return DistAlgebra.build(m, n, p, r)


@lru_cache(maxsize=None)
def context(m: int, n: int, p: int, r: int = 1) -> Context:
    return Context(m, n, p, r)


@pytest.fixture(params=[(2, 1), (3, 1)], ids=["p2", "p3"])
def small(request):
    p, r = request.param
    return algebra(1, 1, p, r)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
