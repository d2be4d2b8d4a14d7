"""
Tests for dampsearch.classical
Sampling with and without replacement and the fully damped baseline
"""

import numpy as np
import pytest

from dampsearch.classical import (
    ClassicalModel,
    classical_curve,
    classical_expected_min,
)
from dampsearch.core import SearchInstance
from dampsearch.damped import fully_damped_curve
from dampsearch.exceptions import DegenerateInstanceError, InvalidArgumentError

ALL_MODELS = list(ClassicalModel)


class TestClassicalModel:
    """Test model tags"""

    @pytest.mark.parametrize(
        "tag,model",
        [
            ("classical-replace", ClassicalModel.WITH_REPLACEMENT),
            ("classical-noreplace", ClassicalModel.WITHOUT_REPLACEMENT),
            ("classical-fully-damped", ClassicalModel.FULLY_DAMPED),
            ("without_replacement", ClassicalModel.WITHOUT_REPLACEMENT),
        ],
    )
    def test_from_tag(self, tag, model):
        """Test command-line tags and enum values both resolve"""
        assert ClassicalModel.from_tag(tag) is model

    def test_unknown_tag(self):
        """Test quantum model tags are not classical"""
        with pytest.raises(InvalidArgumentError):
            ClassicalModel.from_tag("grover")


class TestClassicalCurve:
    """Test the three classical success curves"""

    @pytest.mark.parametrize("model", ALL_MODELS)
    def test_every_item_a_target(self, model):
        """Test M=N succeeds on the first draw for every model"""
        curve = classical_curve(SearchInstance(16, 16), model, 6)

        assert curve.p.tolist() == [1.0] * 6

    @pytest.mark.parametrize(
        "model", [ClassicalModel.WITH_REPLACEMENT, ClassicalModel.WITHOUT_REPLACEMENT]
    )
    def test_single_draw(self, table_instance, model):
        """Test P(1) = M/N"""
        curve = classical_curve(table_instance, model, 3)

        assert curve.at(1) == pytest.approx(table_instance.target_fraction, abs=1e-15)

    def test_with_replacement_formula(self, small_instance):
        """Test P(j) = 1 - (1 - M/N)^j"""
        curve = classical_curve(small_instance, ClassicalModel.WITH_REPLACEMENT, 300)

        assert curve.at(128) == pytest.approx(1 - (254 / 256) ** 128, abs=1e-14)

    def test_without_replacement_product(self, small_instance):
        """Test N=256, M=2 after 128 draws"""
        curve = classical_curve(small_instance, ClassicalModel.WITHOUT_REPLACEMENT, 300)

        assert curve.at(128) == pytest.approx(1 - (128 * 127) / (256 * 255), abs=1e-12)
        assert curve.at(128) == pytest.approx(0.7509804, abs=1e-7)

    def test_without_replacement_exhausts(self, small_instance):
        """Test every sequence of more than N-M draws contains a target"""
        curve = classical_curve(small_instance, ClassicalModel.WITHOUT_REPLACEMENT, 300)

        assert curve.at(254) == pytest.approx(1 - 1 / 32640, abs=1e-12)
        assert np.all(curve.p[254:] == 1.0)

    def test_without_replacement_empty(self):
        """Test M=0 never succeeds"""
        curve = classical_curve(
            SearchInstance(16, 0), ClassicalModel.WITHOUT_REPLACEMENT, 5
        )

        assert curve.p.tolist() == [0.0] * 5

    def test_fully_damped_matches_recurrence(self, small_instance):
        """Test the fully damped model is the cos(phi)=0 recurrence"""
        curve = classical_curve(small_instance, ClassicalModel.FULLY_DAMPED, 50)

        np.testing.assert_array_equal(curve.p, fully_damped_curve(small_instance, 50).p)

    @pytest.mark.parametrize("model", ALL_MODELS)
    def test_tagged(self, small_instance, model):
        """Test the curve carries the model tag"""
        assert classical_curve(small_instance, model, 2).model.kind == model.model_tag

    @pytest.mark.parametrize("model", ALL_MODELS)
    def test_nondecreasing(self, table_instance, model):
        """Test more draws never lower the success probability"""
        curve = classical_curve(table_instance, model, 2000)

        assert np.all(np.diff(curve.p) >= -1e-15)

    def test_without_dominates_with(self, table_instance):
        """Test sampling without replacement is never worse"""
        with_replacement = classical_curve(
            table_instance, ClassicalModel.WITH_REPLACEMENT, 2000
        ).p
        without_replacement = classical_curve(
            table_instance, ClassicalModel.WITHOUT_REPLACEMENT, 2000
        ).p

        assert np.all(without_replacement >= with_replacement - 1e-15)
        # strictly better from the second draw while neither has saturated
        unsaturated = with_replacement[1:] < 1 - 1e-9
        assert np.all(
            without_replacement[1:][unsaturated] > with_replacement[1:][unsaturated]
        )

    def test_invalid_j_max(self, small_instance):
        """Test j_max must be positive"""
        with pytest.raises(InvalidArgumentError):
            classical_curve(small_instance, ClassicalModel.WITH_REPLACEMENT, 0)


class TestClassicalExpectedMin:
    """Test the closed-form minimum of j/P(j) with replacement"""

    def test_small_instance(self, small_instance):
        """Test N=256, M=2 gives (1, 128)"""
        assert classical_expected_min(small_instance) == (1, 128.0)

    def test_large_target_fraction(self):
        """Test N=4096, M=924"""
        j_star, e_min = classical_expected_min(SearchInstance(4096, 924))

        assert j_star == 1
        assert e_min == pytest.approx(4.4329, abs=1e-4)

    def test_empty_instance(self):
        """Test the minimum is undefined without targets"""
        with pytest.raises(DegenerateInstanceError):
            classical_expected_min(SearchInstance(16, 0))
