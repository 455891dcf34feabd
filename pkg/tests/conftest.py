import pytest

from psimoments import EvalConfig, build_lambda_table
from psimoments.evaluator import default_table

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def table():
    return build_lambda_table(2**15 + 64)


@pytest.fixture(scope="session")
def cfg():
    return EvalConfig(n_max=2**14)


@pytest.fixture(scope="session")
def deep_table():
    """Table sized for the default configuration (n_max = 2**20)."""
    return default_table(EvalConfig())


@pytest.fixture(scope="session")
def million_table():
    return build_lambda_table(10**6 + 1)


@pytest.fixture(scope="session")
def ext_table():
    return build_lambda_table(3000, "extended")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
