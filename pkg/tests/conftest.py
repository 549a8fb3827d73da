import numpy as np
import pytest

from drtghost.modring import select_modulus

ACCEPTANCE_RESULTS = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def rings():
    cache = {}

    def get(N, min_value=256, two_adicity=0):
        key = (N, min_value, two_adicity)
        if key not in cache:
            cache[key] = select_modulus(N, min_value, two_adicity)
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title} {detail}")
