import numpy as np
import pytest

from movnorm import (
    EnsembleSpec,
    NegativeLambda,
    NotNonexpansive,
    NotUnitary,
    SpectralRange,
    augmented_moving_norm,
    generate,
    hermitian_am_closed_form,
    hermitian_horizon_closed_form,
    hermitian_range,
    horizon,
    unitary_am_lower_bound_check,
)


def test_closed_form_hand_values():
    r = SpectralRange(-0.5, 0.5)
    assert hermitian_am_closed_form(r, 0.0) == 0.5
    assert hermitian_am_closed_form(r, 0.25) == 1.0
    assert hermitian_am_closed_form(r, 2.0) == 4.5
    one_sided = SpectralRange(0.25, 0.75)
    # below the midpoint the farthest eigenvalue is the upper edge
    assert hermitian_am_closed_form(one_sided, 0.1) == 0.75
    assert hermitian_am_closed_form(one_sided, 0.5) == 0.75
    assert hermitian_am_closed_form(one_sided, 1.0) == 1.75


def test_closed_form_matches_solver_on_random_hermitian():
    worst = 0.0
    for sample in generate(EnsembleSpec("hermitian", 4, 25, 13)):
        spectral = hermitian_range(sample)
        for lam in np.linspace(0.0, 2.0, 17):
            gap = abs(
                augmented_moving_norm(sample, lam)
                - hermitian_am_closed_form(spectral, lam)
            )
            worst = max(worst, gap)
    assert worst <= 1e-10


@pytest.mark.parametrize(
    "lo, hi, expected",
    [(-0.5, 0.5, 0.25), (-1.0, 1.0, 0.0), (1.0, 1.0, 1.0), (0.0, 0.5, 0.5)],
)
def test_horizon_closed_form_values(lo, hi, expected):
    assert hermitian_horizon_closed_form(SpectralRange(lo, hi)) == expected


@pytest.mark.parametrize("lo, hi", [(-1.5, 0.5), (-0.5, 1.5), (-2.0, 2.0)])
def test_horizon_closed_form_rejects_expansive_range(lo, hi):
    with pytest.raises(NotNonexpansive):
        hermitian_horizon_closed_form(SpectralRange(lo, hi))


def test_closed_form_rejects_negative_lambda():
    with pytest.raises(NegativeLambda):
        hermitian_am_closed_form(SpectralRange(-0.5, 0.5), -0.1)


def test_ne_hermitian_horizon_criteria():
    # positive horizon exactly when the lowest eigenvalue clears -1
    assert horizon(np.diag([-1.0, 0.3])).value <= 1e-7
    assert abs(horizon(np.diag([-0.9, 0.3])).value - 0.05) <= 1e-7
    # horizon 1 pins the matrix to the identity
    assert horizon(np.eye(3)).value == 1.0
    assert horizon(np.diag([1.0, 1.0 - 3e-8])).value < 1.0


def test_horizon_solver_matches_closed_form():
    for sample in generate(EnsembleSpec("hermitian", 3, 25, 29)):
        expected = hermitian_horizon_closed_form(hermitian_range(sample))
        assert abs(horizon(sample).value - expected) <= 1e-7


def test_unitary_lower_bound_on_phase_matrix():
    u = np.diag(np.exp(1j * np.array([0.3, -1.2, 2.5])))
    slack = unitary_am_lower_bound_check(u, np.linspace(0.0, 2.0, 21))
    assert slack >= -1e-12


def test_unitary_lower_bound_rotation_fixture():
    # eigenphases of the quarter turn are +-pi/2, so am(1) - 1 = sqrt(2)
    rot = np.array([[0.0, -1.0], [1.0, 0.0]])
    slack = unitary_am_lower_bound_check(rot, [1.0])
    assert abs(slack - np.sqrt(2.0)) <= 1e-12


def test_unitary_lower_bound_rejects_non_unitary():
    with pytest.raises(NotUnitary):
        unitary_am_lower_bound_check(np.diag([1.0, 0.5]), [0.0, 1.0])
