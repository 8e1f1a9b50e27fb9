from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from graphs import square, square_diag
from dimerpf.embedding import PlanarGraph

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


@pytest.fixture
def sq() -> PlanarGraph:
    return square()


@pytest.fixture
def sqd() -> PlanarGraph:
    return square_diag()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
