"""End-to-end acceptance gate.

Each test prints one ``criterion N PASS|FAIL`` line and the same lines
are repeated in the terminal summary. Criteria 2 through 6 read the
shared full verification run; criterion 1 times the analytic fixtures
and criterion 7 replays the CLI twice.
"""

import time

import numpy as np
from click.testing import CliRunner

import movnorm
from movnorm.cli import main as cli_main

HORIZON_FIXTURES = (
    (np.eye(2), 1.0),
    (np.zeros((2, 2)), 0.5),
    (-np.eye(2), 0.0),
    (np.diag([1.0, 0.0]), 0.5),
    (np.diag([0.5, -0.5]), 0.25),
    (0.5 * np.eye(2), 0.75),
    (np.array([[0.0, 1.0], [0.0, 0.0]]), 0.0),
)

INEQUALITY_CHECKS = (
    "eq4_scaling",
    "eq5_sum",
    "eq6_infimum",
    "eq8_am_scaling",
    "eq9_am_sum",
    "eq10_am_infimum",
    "eq12_product",
    "thm_hor_sum",
    "thm_hor_product",
    "eq19_cstar",
    "eq20_cstar_hor",
)


def test_criterion_1_analytic_horizon_fixtures(warmup, acceptance_log):
    start = time.perf_counter()
    worst = 0.0
    for matrix, expected in HORIZON_FIXTURES:
        worst = max(worst, abs(movnorm.horizon(matrix).value - expected))
    wall = time.perf_counter() - start
    ok = worst <= 1e-8 and wall < 1.0
    acceptance_log(
        "criterion 1 %s analytic horizon fixtures: worst error %.2e"
        " (tol 1e-8), %.3fs (limit 1s)" % ("PASS" if ok else "FAIL", worst, wall)
    )
    assert worst <= 1e-8
    assert wall < 1.0


def test_criterion_2_hermitian_closed_form(full_run, acceptance_log):
    reports, _wall = full_run
    closed = reports["thm_hermitian_closed_form"]
    level = reports["thm_hermitian_horizon"]
    ok = (
        closed.failures == 0
        and closed.trials == 2000
        and closed.worst_violation <= 1e-8
        and level.failures == 0
        and level.trials == 2000
        and level.worst_violation <= 1e-7
    )
    acceptance_log(
        "criterion 2 %s hermitian closed form: am gap %.2e (tol 1e-8),"
        " horizon gap %.2e (tol 1e-7), %d trials each"
        % (
            "PASS" if ok else "FAIL",
            closed.worst_violation,
            level.worst_violation,
            closed.trials,
        )
    )
    assert ok


def test_criterion_3_inequality_suite(full_run, acceptance_log):
    reports, wall = full_run
    failing = [
        check_id for check_id in INEQUALITY_CHECKS if reports[check_id].failures
    ]
    trials = sum(reports[check_id].trials for check_id in INEQUALITY_CHECKS)
    ok = not failing and wall < 60.0
    acceptance_log(
        "criterion 3 %s inequality suite: %d checks, %d trials,"
        " failing=%r, full run %.1fs (limit 60s)"
        % ("PASS" if ok else "FAIL", len(INEQUALITY_CHECKS), trials, failing, wall)
    )
    assert not failing
    assert wall < 60.0


def test_criterion_4_unitary_theorem(full_run, acceptance_log):
    reports, _wall = full_run
    report = reports["thm_unitary"]
    ok = report.failures == 0 and report.trials == 2000
    acceptance_log(
        "criterion 4 %s unitary theorem: %d trials, worst violation %.2e"
        " (tol 1e-9)" % ("PASS" if ok else "FAIL", report.trials, report.worst_violation)
    )
    assert ok


def test_criterion_5_fne_triple_equivalence(full_run, acceptance_log):
    reports, _wall = full_run
    report = reports["thm_fne_equiv"]
    ok = report.failures == 0 and report.trials + report.skipped == 4000
    acceptance_log(
        "criterion 5 %s fne triple equivalence: %d agreeing trials,"
        " %d boundary skips, %d disagreements"
        % ("PASS" if ok else "FAIL", report.trials, report.skipped, report.failures)
    )
    assert ok


def test_criterion_6_adjoint_and_scaling(full_run, acceptance_log):
    reports, _wall = full_run
    adjoint = reports["thm_adjoint"]
    scaling = reports["eq4_scaling"]
    am_scaling = reports["eq8_am_scaling"]
    # 6 ensemble kinds x 4 dims x 500 trials certifies every ensemble
    ok = all(
        report.failures == 0 and report.trials == 12000
        for report in (adjoint, scaling, am_scaling)
    )
    acceptance_log(
        "criterion 6 %s adjoint symmetry and scaling: horizon gap %.2e"
        " (tol 1e-8), scaling gaps %.2e / %.2e (tol 1e-9)"
        % (
            "PASS" if ok else "FAIL",
            adjoint.worst_violation,
            scaling.worst_violation,
            am_scaling.worst_violation,
        )
    )
    assert ok


def test_criterion_7_cli_determinism(warmup, acceptance_log):
    runner = CliRunner()
    args = ["verify", "--dims", "2,3", "--trials", "10", "--seed", "123"]
    first = runner.invoke(cli_main, args)
    second = runner.invoke(cli_main, args)
    identical = first.stdout.encode() == second.stdout.encode()
    ok = first.exit_code == 0 and second.exit_code == 0 and identical
    acceptance_log(
        "criterion 7 %s cli determinism: fixed-seed reports byte-identical=%s,"
        " exit codes %d/%d"
        % ("PASS" if ok else "FAIL", identical, first.exit_code, second.exit_code)
    )
    assert ok
