import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from repclus import DiagonalSet, PolygonParams, enumerate_diagonals

settings.register_profile(
    "repclus", deadline=None, max_examples=150, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repclus")


@st.composite
def params_st(draw, max_n=4, max_p=4):
    return PolygonParams(draw(st.integers(1, max_n)), draw(st.integers(1, max_p)))


@st.composite
def diagonal_st(draw, params):
    return draw(st.sampled_from(enumerate_diagonals(params)))


@st.composite
def set_st(draw, params):
    return DiagonalSet(params, draw(st.integers(0, (1 << params.total) - 1)))


@st.composite
def params_and_set(draw, max_n=4, max_p=4):
    P = draw(params_st(max_n, max_p))
    return P, draw(set_st(P))


def pytest_terminal_summary(terminalreporter):
    from _acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        ok, title, detail = RESULTS[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {title}  {detail}")


@pytest.fixture
def P33():
    return PolygonParams(3, 3)
