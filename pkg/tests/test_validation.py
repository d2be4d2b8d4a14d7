"""
Tests for dampsearch.validation module
Tests validators, schemas and the validate_schema decorator
"""

import pytest

from dampsearch.exceptions import InvalidArgumentError
from dampsearch.validation import (
    VALIDATION_FAILED_MESSAGE,
    ChoicesValidator,
    IntegerValidator,
    PositiveValidator,
    RangeValidator,
    RequiredValidator,
    ValidationResult,
    ValidationSchema,
    Validator,
    report_spec_schema,
    validate_schema,
)


class TestValidationResult:
    """Test ValidationResult class"""

    def test_success_creation(self):
        """Test creating successful validation result"""
        result = ValidationResult.success()

        assert result.is_valid is True
        assert result.errors == {}
        result.raise_for_errors()

    def test_add_error(self):
        """Test adding errors to validation result"""
        result = ValidationResult.success()
        result.add_error("spins", "spins is required")
        result.add_error("spins", "spins must be an integer")

        assert result.is_valid is False
        assert len(result.errors["spins"]) == 2
        assert result.summary() == "spins is required; spins must be an integer"

    def test_raise_for_errors(self):
        """Test failures surface as invalid-argument errors"""
        result = ValidationResult.failure({"j_max": ["j_max must be at least 1"]})

        with pytest.raises(InvalidArgumentError) as exc_info:
            result.raise_for_errors()

        assert exc_info.value.message.startswith(VALIDATION_FAILED_MESSAGE)
        assert exc_info.value.details["errors"] == {"j_max": ["j_max must be at least 1"]}


class TestValidators:
    """Test individual validators"""

    def test_base_validator_is_abstract(self):
        """Test the base class must be subclassed"""
        with pytest.raises(NotImplementedError):
            Validator()("value")

    def test_required(self):
        """Test None and empty values are missing"""
        validator = RequiredValidator()

        assert validator(0) is True
        assert validator(None) is False
        assert validator([]) is False
        assert validator.format_message("spins") == "spins is required"

    def test_integer(self):
        """Test integers pass and bools and floats do not"""
        validator = IntegerValidator()

        assert validator(3) is True
        assert validator(None) is True
        assert validator(3.0) is False
        assert validator(True) is False

    def test_range(self):
        """Test bounds are inclusive and non-finite values fail"""
        validator = RangeValidator(min_value=0.0, max_value=1.0)

        assert validator(0.0) is True
        assert validator(1.0) is True
        assert validator(1.01) is False
        assert validator(float("nan")) is False
        assert validator("abc") is False
        assert validator.format_message("cos_phi") == "cos_phi must be between 0.0 and 1.0"

    def test_range_messages(self):
        """Test messages for one-sided ranges"""
        assert RangeValidator(min_value=1).format_message("j_max") == "j_max must be at least 1"
        assert RangeValidator(max_value=5).format_message("x") == "x must be at most 5"

    def test_choices_with_lists(self):
        """Test every item of a list must be allowed"""
        validator = ChoicesValidator(["grover", "damped"])

        assert validator("grover") is True
        assert validator(["grover", "damped"]) is True
        assert validator(["grover", "quantum-walk"]) is False
        assert validator.format_message("models") == "models must be one of: grover, damped"

    def test_custom_message(self):
        """Test a custom message replaces the default"""
        validator = RangeValidator(min_value=0, error_message="{field} must be positive")

        assert validator.format_message("epsilon") == "epsilon must be positive"

    def test_positive(self):
        """Test zero, negatives and non-finite values are not positive"""
        validator = PositiveValidator()

        assert validator(0.5) is True
        assert validator(None) is True
        assert validator(0) is False
        assert validator(-1.0) is False
        assert validator(float("inf")) is False
        assert validator("abc") is False
        assert validator.format_message("epsilon") == "epsilon must be positive"


class TestValidationSchema:
    """Test schemas over dictionaries"""

    def test_first_error_per_field(self):
        """Test validation stops at the first failing rule of a field"""
        schema = ValidationSchema(
            {"spins": [RequiredValidator(), IntegerValidator(), RangeValidator(2, 24)]}
        )

        result = schema.validate({})

        assert result.errors == {"spins": ["spins is required"]}

    def test_report_spec_schema(self):
        """Test the report rules accept a typical request"""
        data = {
            "spins": 12,
            "lambda_units": -9,
            "epsilon": 1.0,
            "models": ["grover", "damped"],
            "j_max": 60,
            "cos_phi": None,
            "output_format": "csv",
        }

        assert report_spec_schema().validate(data).is_valid

    def test_report_spec_schema_errors(self):
        """Test every out-of-range field is reported"""
        data = {
            "spins": 30,
            "epsilon": 0.0,
            "models": ["annealing"],
            "j_max": 0,
            "cos_phi": 1.5,
            "output_format": "xml",
        }

        result = report_spec_schema().validate(data)

        assert set(result.errors) == {
            "spins",
            "epsilon",
            "models",
            "j_max",
            "cos_phi",
            "output_format",
        }

    def test_spin_cap_is_configurable(self):
        """Test the cap follows the configuration"""
        result = report_spec_schema(max_spins=10).validate(
            {"spins": 12, "epsilon": 1.0, "models": ["damped"], "output_format": "csv"}
        )

        assert result.errors["spins"] == ["spins must be between 2 and 10"]


class TestValidateSchemaDecorator:
    """Test the argument-validating decorator"""

    def test_valid_call(self):
        """Test valid arguments reach the function"""

        @validate_schema({"j_max": [IntegerValidator(), RangeValidator(min_value=1)]})
        def scan(j_max=5):
            return j_max * 2

        assert scan(4) == 8
        assert scan() == 10

    def test_invalid_call(self):
        """Test invalid arguments raise before the call"""
        calls = []

        @validate_schema({"j_max": [RangeValidator(min_value=1)]})
        def scan(j_max):
            calls.append(j_max)

        with pytest.raises(InvalidArgumentError):
            scan(j_max=0)
        assert calls == []
