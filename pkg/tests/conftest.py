"""Shared fixtures: kernel warmup, one full verification run, result log."""

import time

import numpy as np
import pytest

import movnorm


def _warm_kernels():
    m = np.eye(2, dtype=np.complex128)
    movnorm.operator_norm(m)
    movnorm.moving_norm(m, 0.5)
    movnorm.horizon(0.5 * m)
    movnorm.hermitian_range(m)


@pytest.fixture(scope="session")
def warmup():
    """Compile or load the jitted kernels before anything is timed."""
    _warm_kernels()


@pytest.fixture(scope="session")
def full_run(warmup):
    """Default verification configuration, run once and shared.

    Returns ({check_id: TheoremReport}, wall seconds).
    """
    specs = movnorm.default_specs()
    start = time.perf_counter()
    reports = movnorm.run_all(specs)
    wall = time.perf_counter() - start
    return {report.check_id: report for report in reports}, wall


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance_log(request):
    """Record one summary line per acceptance criterion."""
    lines = request.config._acceptance_lines

    def log(line):
        lines.append(line)
        print(line)

    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
