import numpy as np
import pytest

from bimodal_jc import ModelParams, tms_coefficients

SINH2R = 10.0

_criteria = {}


def make(theta=0.0, phi=0.0, eta=0.0, sinh2r=SINH2R, **kw):
    p = ModelParams.from_sinh2r(sinh2r, theta=theta, phi=phi, eta=eta, **kw)
    return p, tms_coefficients(p)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _criteria[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
