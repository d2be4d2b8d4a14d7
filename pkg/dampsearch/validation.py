"""
dampsearch Validation System
Declarative validators for report and command-line parameters
"""

from __future__ import annotations

import functools
import inspect
import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from .constants import DEFAULT_MAX_SPINS, MIN_SPINS, MODELS, OUTPUT_FORMATS
from .exceptions import InvalidArgumentError

# Constants
VALIDATION_FAILED_MESSAGE = "Validation failed"


@dataclass
class ValidationResult:
    """Result of validation operation"""

    is_valid: bool
    errors: dict[str, list[str]]

    @classmethod
    def success(cls) -> ValidationResult:
        """Create successful validation result"""
        return cls(is_valid=True, errors={})

    @classmethod
    def failure(cls, errors: dict[str, list[str]]) -> ValidationResult:
        """Create failed validation result"""
        return cls(is_valid=False, errors=errors)

    def add_error(self, field: str, message: str):
        """Add an error to the result"""
        self.errors.setdefault(field, []).append(message)
        self.is_valid = False

    def summary(self) -> str:
        """One-line description of every error"""
        return "; ".join(
            message for messages in self.errors.values() for message in messages
        )

    def raise_for_errors(self) -> None:
        if not self.is_valid:
            raise InvalidArgumentError(
                f"{VALIDATION_FAILED_MESSAGE}: {self.summary()}", errors=self.errors
            )


class Validator:
    """Base validator class"""

    def __init__(self, error_message: str = None):
        self.error_message = error_message or self._default_error_message()

    def _default_error_message(self) -> str:
        """Default error message for this validator"""
        return VALIDATION_FAILED_MESSAGE

    def validate(self, value: Any, field_name: str = None) -> bool:
        """Validate a value. Should be overridden by subclasses"""
        raise NotImplementedError

    def format_message(self, field_name: str) -> str:
        return self.error_message.format(field=field_name, **self._message_params())

    def _message_params(self) -> dict[str, Any]:
        return {}

    def __call__(self, value: Any, field_name: str = None) -> bool:
        """Make validator callable"""
        return self.validate(value, field_name)


class RequiredValidator(Validator):
    """Validates that a field is not None/empty"""

    def _default_error_message(self) -> str:
        return "{field} is required"

    def validate(self, value: Any, field_name: str = None) -> bool:
        if value is None:
            return False
        if hasattr(value, "__len__") and len(value) == 0:
            return False
        return True


class IntegerValidator(Validator):
    """Validates that a value is an integer (bools excluded)"""

    def _default_error_message(self) -> str:
        return "{field} must be an integer"

    def validate(self, value: Any, field_name: str = None) -> bool:
        if value is None:
            return True
        return isinstance(value, int) and not isinstance(value, bool)


class RangeValidator(Validator):
    """Validates numeric ranges"""

    def __init__(
        self,
        min_value: int | float | None = None,
        max_value: int | float | None = None,
        **kwargs,
    ):
        self.min_value = min_value
        self.max_value = max_value
        super().__init__(**kwargs)

    def _default_error_message(self) -> str:
        if self.min_value is not None and self.max_value is not None:
            return "{field} must be between {min_value} and {max_value}"
        elif self.min_value is not None:
            return "{field} must be at least {min_value}"
        elif self.max_value is not None:
            return "{field} must be at most {max_value}"
        return "{field} value is out of range"

    def _message_params(self) -> dict[str, Any]:
        return {"min_value": self.min_value, "max_value": self.max_value}

    def validate(self, value: Any, field_name: str = None) -> bool:
        if value is None:
            return True

        try:
            num_value = float(value)
        except (ValueError, TypeError):
            return False

        if not math.isfinite(num_value):
            return False
        if self.min_value is not None and num_value < self.min_value:
            return False
        if self.max_value is not None and num_value > self.max_value:
            return False

        return True


class PositiveValidator(Validator):
    """Validates a finite number strictly above zero"""

    def _default_error_message(self) -> str:
        return "{field} must be positive"

    def validate(self, value: Any, field_name: str = None) -> bool:
        if value is None:
            return True
        try:
            num_value = float(value)
        except (ValueError, TypeError):
            return False
        return math.isfinite(num_value) and num_value > 0


class ChoicesValidator(Validator):
    """Validates that value (or every item of a list value) is an allowed choice"""

    def __init__(self, choices: list[Any] | tuple[Any, ...], **kwargs):
        self.choices = list(choices)
        super().__init__(**kwargs)

    def _default_error_message(self) -> str:
        return "{field} must be one of: {choices}"

    def _message_params(self) -> dict[str, Any]:
        return {"choices": ", ".join(str(c) for c in self.choices)}

    def validate(self, value: Any, field_name: str = None) -> bool:
        if value is None:
            return True
        if isinstance(value, list | tuple):
            return all(item in self.choices for item in value)
        return value in self.choices


class ValidationSchema:
    """Schema for validating dictionaries of data"""

    def __init__(self, rules: dict[str, list[Validator]]):
        self.rules = rules

    def validate(self, data: dict[str, Any]) -> ValidationResult:
        """Check every field; only the first failing rule of a field is reported"""
        result = ValidationResult.success()
        for field_name, validators in self.rules.items():
            value = data.get(field_name)
            failed = next((v for v in validators if not v(value, field_name)), None)
            if failed is not None:
                result.add_error(field_name, failed.format_message(field_name))
        return result


def validate_schema(schema: dict[str, list[Validator]] | ValidationSchema):
    """
    Decorator validating function arguments against a schema

    Usage:
        @validate_schema({"spins": [RequiredValidator(), RangeValidator(2, 24)]})
        def build(spins): ...
    """
    validation_schema = (
        schema if isinstance(schema, ValidationSchema) else ValidationSchema(schema)
    )

    def decorator(func: Callable):
        sig = inspect.signature(func)

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            bound = sig.bind(*args, **kwargs)
            bound.apply_defaults()
            validation_schema.validate(dict(bound.arguments)).raise_for_errors()
            return func(*args, **kwargs)

        return wrapper

    return decorator


def report_spec_schema(max_spins: int = DEFAULT_MAX_SPINS) -> ValidationSchema:
    """Rules for a ReportSpec with the given chain-size cap"""
    return ValidationSchema(
        {
            "spins": [
                RequiredValidator(),
                IntegerValidator(),
                RangeValidator(min_value=MIN_SPINS, max_value=max_spins),
            ],
            "lambda_units": [IntegerValidator()],
            "epsilon": [RequiredValidator(), PositiveValidator()],
            "models": [RequiredValidator(), ChoicesValidator(MODELS)],
            "j_max": [
                IntegerValidator(),
                RangeValidator(min_value=1),
            ],
            "cos_phi": [RangeValidator(min_value=0.0, max_value=1.0)],
            "output_format": [RequiredValidator(), ChoicesValidator(OUTPUT_FORMATS)],
        }
    )
