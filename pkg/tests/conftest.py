import numpy as np
import pytest
from hypothesis import settings

import helpers

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")


@pytest.fixture
def six():
    return helpers.six_matrix(), helpers.SIX_PARTITION


@pytest.fixture
def twelve():
    return helpers.twelve_matrix(), helpers.TWELVE_PARTITION


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def pytest_runtest_logreport(report):
    # One visible pass/fail line per acceptance criterion.
    if report.when == "call" and "test_acceptance" in report.nodeid:
        name = report.nodeid.rsplit("::", 1)[-1]
        status = "PASS" if report.passed else "FAIL"
        print(f"\n[acceptance] {name}: {status}")
