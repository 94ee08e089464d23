import pytest

from gwakk.classify import named_example

FIXTURE_NAMES = ["weyl", "quantum-weyl", "quantum-plane", "b-lambda-0", "wpq-1-1"]


def fixture_presentation(name):
    if name == "b-lambda-0":
        return named_example("b-lambda", lam=0)
    if name == "wpq-1-1":
        return named_example("wpq", k=1, l=1)
    return named_example(name)


@pytest.fixture
def weyl():
    return named_example("weyl")


@pytest.fixture
def qweyl():
    return named_example("quantum-weyl")


@pytest.fixture(params=FIXTURE_NAMES)
def pres(request):
    return fixture_presentation(request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
