"""
Tests for dampsearch.grover
Closed form, 2x2 rotation and the state-vector simulation
"""

import math

import numpy as np
import pytest

from dampsearch.core import SearchInstance
from dampsearch.exceptions import DegenerateInstanceError, InvalidArgumentError
from dampsearch.grover import (
    closed_form_amplitudes,
    grover_failure_bound,
    grover_probability_curve,
    grover_rotation,
    iterate_statevector,
    optimal_grover_iterations,
    statevector_run,
    success_probability_grover,
)
from dampsearch.spectrum import OracleMask, oracle_mask


class TestClosedForm:
    """Test the closed-form amplitudes"""

    def test_checkpoint_probability(self, checkpoint_instance):
        """Test N=4096, M=22 reaches about 99.9% after 10 iterations"""
        amplitudes = closed_form_amplitudes(checkpoint_instance, 10)

        assert 22 * amplitudes.k**2 == pytest.approx(0.9991, abs=5e-4)

    def test_one_iteration(self):
        """Test N=256, M=42 after one iteration"""
        instance = SearchInstance(256, 42)
        amplitudes = closed_form_amplitudes(instance, 1)
        s = instance.sin_theta

        assert 42 * amplitudes.k**2 == pytest.approx(
            (3 * s - 4 * s**3) ** 2, abs=1e-12
        )
        assert 42 * amplitudes.k**2 == pytest.approx(0.901, abs=1e-3)

    def test_zero_iterations_is_uniform(self, small_instance):
        """Test j=0 gives the uniform amplitude 1/sqrt(N) everywhere"""
        amplitudes = closed_form_amplitudes(small_instance, 0)

        assert amplitudes.k == pytest.approx(1 / 16)
        assert amplitudes.l == pytest.approx(1 / 16)

    @pytest.mark.parametrize("j", [0, 1, 7, 50, 313])
    def test_normalized(self, checkpoint_instance, j):
        """Test M k^2 + (N-M) l^2 = 1"""
        amplitudes = closed_form_amplitudes(checkpoint_instance, j)

        assert amplitudes.norm_squared(checkpoint_instance) == pytest.approx(
            1.0, abs=1e-12
        )

    def test_full_instance_is_degenerate(self):
        """Test M=N has no nontarget amplitude"""
        with pytest.raises(DegenerateInstanceError):
            closed_form_amplitudes(SearchInstance(8, 8), 3)

    def test_empty_instance_is_degenerate(self):
        """Test M=0 has no target amplitude"""
        with pytest.raises(DegenerateInstanceError):
            closed_form_amplitudes(SearchInstance(8, 0), 3)

    def test_negative_iterations(self, small_instance):
        """Test negative iteration counts are rejected"""
        with pytest.raises(InvalidArgumentError):
            closed_form_amplitudes(small_instance, -1)


class TestSuccessProbability:
    """Test P(j) = sin^2((2j+1) theta)"""

    def test_checkpoint(self, checkpoint_instance):
        """Test the 10-iteration checkpoint lies in [0.9985, 0.9995]"""
        p = success_probability_grover(checkpoint_instance, 10)

        assert 0.9985 <= p <= 0.9995

    def test_full_instance(self):
        """Test every draw succeeds when every item is a target"""
        assert success_probability_grover(SearchInstance(16, 16), 5) == 1.0

    def test_curve_matches_pointwise(self, checkpoint_instance):
        """Test the vectorized curve agrees with the scalar form"""
        curve = grover_probability_curve(checkpoint_instance, 40)

        assert curve.j_max == 40
        assert curve.model.kind == "grover"
        for j in (1, 10, 25, 40):
            assert curve.at(j) == pytest.approx(
                success_probability_grover(checkpoint_instance, j), abs=1e-14
            )

    def test_full_instance_curve(self):
        """Test M=N gives a flat curve at 1"""
        curve = grover_probability_curve(SearchInstance(4, 4), 5)

        assert curve.p.tolist() == [1.0] * 5

    def test_oscillation_returns(self, checkpoint_instance):
        """Test the undamped curve falls back towards zero after its peak"""
        curve = grover_probability_curve(checkpoint_instance, 60)

        assert int(np.argmax(curve.p[:15])) + 1 == 10
        assert curve.p[10:31].min() < 0.01


class TestRotation:
    """Test the 2x2 rotation built from N and M"""

    def test_cosine(self, small_instance):
        """Test cos 2theta = (N - 2M)/N for N=256, M=2"""
        rotation = grover_rotation(small_instance)

        assert rotation.cos_2theta == (256 - 4) / 256
        assert rotation.cos_2theta == 0.984375

    def test_matches_angle(self, checkpoint_instance):
        """Test the entries equal cos 2theta and sin 2theta of the instance"""
        rotation = grover_rotation(checkpoint_instance)
        theta = checkpoint_instance.theta

        assert rotation.cos_2theta == pytest.approx(math.cos(2 * theta), abs=1e-15)
        assert rotation.sin_2theta == pytest.approx(math.sin(2 * theta), abs=1e-15)

    def test_reproduces_closed_form(self, checkpoint_instance):
        """Test repeated rotation of (sqrt(M) k, sqrt(N-M) l) follows the closed form"""
        rotation = grover_rotation(checkpoint_instance)
        start = np.array([checkpoint_instance.sin_theta, checkpoint_instance.cos_theta])

        for j in (1, 5, 30):
            pair = rotation.apply(start, times=j)
            amplitudes = closed_form_amplitudes(checkpoint_instance, j)
            assert pair[0] == pytest.approx(math.sqrt(22) * amplitudes.k, abs=1e-12)
            assert pair[1] == pytest.approx(math.sqrt(4074) * amplitudes.l, abs=1e-12)

    def test_matrix_is_orthogonal(self, small_instance):
        """Test R R^T = I"""
        matrix = grover_rotation(small_instance).matrix

        np.testing.assert_allclose(matrix @ matrix.T, np.eye(2), atol=1e-15)


class TestOptimalStopping:
    """Test the known-M stopping point"""

    def test_checkpoint(self, checkpoint_instance):
        """Test floor(pi/(4 theta)) for N=4096, M=22"""
        assert optimal_grover_iterations(checkpoint_instance) == 10

    def test_failure_bound(self, checkpoint_instance):
        """Test the failure probability at the stopping point is below M/N"""
        j = optimal_grover_iterations(checkpoint_instance)
        failure = 1 - success_probability_grover(checkpoint_instance, j)

        assert grover_failure_bound(checkpoint_instance) == 22 / 4096
        assert failure <= grover_failure_bound(checkpoint_instance)

    def test_empty_instance(self):
        """Test there is no stopping point without targets"""
        with pytest.raises(DegenerateInstanceError):
            optimal_grover_iterations(SearchInstance(16, 0))


class TestStateVector:
    """Test the phase-oracle plus diffusion simulation"""

    def test_uniform_start(self, chain8_diagonal):
        """Test the first yielded state is uniform"""
        mask = oracle_mask(chain8_diagonal, -7)
        first = next(iterate_statevector(mask, 3))

        np.testing.assert_allclose(first.amplitudes, np.full(256, 1 / 16))

    def test_ground_state_search(self, chain8_diagonal):
        """Test n=8, lambda=-7, j=8 gives sin^2(17 theta)"""
        mask = oracle_mask(chain8_diagonal, -7)
        state = statevector_run(mask, 8)
        theta = math.asin(math.sqrt(2 / 256))

        assert state.probability(mask.marked) == pytest.approx(
            math.sin(17 * theta) ** 2, abs=1e-10
        )
        assert state.probability(mask.marked) == pytest.approx(0.9955, abs=1e-3)

    def test_twelve_spin_checkpoint(self, chain12_diagonal):
        """Test n=12, lambda=-9 reaches about 99.9% after 10 iterations"""
        mask = oracle_mask(chain12_diagonal, -9)

        assert statevector_run(mask, 10).probability(mask.marked) == pytest.approx(
            0.9991, abs=5e-4
        )

    def test_yielded_states_are_independent(self, chain8_diagonal):
        """Test later iterations do not overwrite earlier yielded states"""
        mask = oracle_mask(chain8_diagonal, -5)
        states = list(iterate_statevector(mask, 3))

        assert len(states) == 4
        np.testing.assert_allclose(states[0].amplitudes, np.full(256, 1 / 16))

    def test_everything_marked_is_rejected(self):
        """Test a mask covering the whole space cannot be searched"""
        full = OracleMask(n=1, lambda_units=-1, marked=np.array([0, 1]))

        with pytest.raises(DegenerateInstanceError):
            statevector_run(full, 1)


@pytest.mark.slow
class TestOracleEquivalence:
    """Test the state-vector run against the closed form on every level"""

    @pytest.mark.parametrize("diagonal_fixture", ["chain8_diagonal", "chain12_diagonal"])
    def test_amplitudes_follow_closed_form(self, request, diagonal_fixture):
        """Test marked and unmarked amplitudes for j <= 200"""
        diagonal = request.getfixturevalue(diagonal_fixture)
        levels = np.unique(diagonal.units)

        for lambda_units in levels.tolist():
            mask = oracle_mask(diagonal, lambda_units)
            instance = SearchInstance(mask.dimension, mask.count)
            unmarked = ~mask.as_boolean()
            for j, state in enumerate(iterate_statevector(mask, 200)):
                expected = closed_form_amplitudes(instance, j)
                amplitudes = state.amplitudes
                assert np.max(np.abs(amplitudes[mask.marked] - expected.k)) < 1e-10
                assert np.max(np.abs(amplitudes[unmarked] - expected.l)) < 1e-10
                assert abs(state.norm() - 1.0) < 1e-12
