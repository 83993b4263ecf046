import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from coronacolor.catalog import all_cubic_entries, named, random_cubic

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL_CUBIC = [e for n in (4, 6, 8) for e in all_cubic_entries(n)]
CENTERS = ("k4", "k33", "prism")


@st.composite
def cubic_graphs(draw, min_order=4, max_order=20):
    order = draw(st.integers(min_order // 2, max_order // 2)) * 2
    seed = draw(st.integers(0, 2**16))
    return random_cubic(order, seed)


@pytest.fixture(params=[e.name for e in SMALL_CUBIC])
def small_cubic(request):
    return next(e.graph for e in SMALL_CUBIC if e.name == request.param)


@pytest.fixture
def k4():
    return named("k4")


@pytest.fixture
def petersen():
    return named("petersen")


# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
