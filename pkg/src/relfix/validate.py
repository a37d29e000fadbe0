"""
Validate the fields of instance files and configuration settings.

File:       validate.py
Author:     Lorn B Kerr
Copyright:  (c) 2022, 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.1.0
"""

import math
import re
import sys
from fractions import Fraction
from typing import Any, Union

file_version = "1.1.0"
changes = {
    "1.0.0": "Initial release",
    "1.1.0": "Exact rational, real and identifier fields for instance files.",
}

RATIONAL_PATTERN = r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$"
"""A decimal literal, optionally with an exponent."""
FRACTION_PATTERN = r"^[+-]?\d+\s*/\s*[1-9]\d*$"
"""A quotient of integers such as '1/3'."""
IDENTIFIER_PATTERN = r"^[A-Za-z0-9_.:\-]+$"
"""Point ids: no whitespace, no quotes."""


class Validate:
    """
    Provides various methods to validate variables.

    Every method returns the same result dict:
        ['entry'] - the value, converted when valid.
        ['valid'] - (bool) True if the value is acceptable.
        ['msg'] - (str) Error message if not valid.
    """

    REQUIRED = True
    """(bool) variable required, must satisfy requirements."""
    OPTIONAL = False
    """(bool) variable optional, if present, must satisfy requirements."""

    def integer_field(
        self,
        value: Union[int, str],
        required: bool,
        min_value: int = 0,
        max_value: int = sys.maxsize,
    ) -> dict[str, Any]:
        """
        Validate an integer field.

        The 'value' can be an int or a string holding an integer. An
        OPTIONAL empty string is accepted and becomes None.

        Parameters:
            value (int | str): the value to check.
            required (bool): Validate.REQUIRED or Validate.OPTIONAL.
            min_value (int): minimum value, default 0.
            max_value (int): maximum value, default sys.maxsize.

        Returns:
            (dict) the validation result.
        """
        result = {"entry": value, "valid": True, "msg": ""}

        if value is None or value == "":
            if required == self.OPTIONAL:
                result["entry"] = None
            else:
                result["valid"] = False
                result["msg"] = "An integer entry is required"
            return result

        if isinstance(value, bool) or not isinstance(value, (int, str)):
            result["valid"] = False
            result["msg"] = "Value must be an integer or its string representation"
            return result

        if isinstance(value, str):
            value = value.strip()
            if re.match(r"^[-+]?([1-9]\d*|0)$", value):
                value = int(value)
                result["entry"] = value
            else:
                result["valid"] = False
                result["msg"] = "Value does not represent an Integer value"
                return result

        if value < min_value:
            result["valid"] = False
            result["msg"] = "The entry is less than the minimum " + str(min_value)
        elif value > max_value:
            result["valid"] = False
            result["msg"] = "The entry is greater than the maximum " + str(max_value)
        return result

    def rational_field(
        self,
        value: Union[str, int, Fraction],
        required: bool,
        min_value: Fraction = None,
        max_value: Fraction = None,
        min_exclusive: bool = False,
        max_exclusive: bool = False,
    ) -> dict[str, Any]:
        """
        Validate an exact rational number.

        Accepted forms are an int, a Fraction, a decimal string such as
        '0.25' or '1e-3', or a quotient string such as '1/3'. Floats
        are refused: a float has already lost the exact value. The
        valid entry is a Fraction.

        Parameters:
            value (str | int | Fraction): the value to check.
            required (bool): Validate.REQUIRED or Validate.OPTIONAL.
            min_value (Fraction): lower bound, None for no bound.
            max_value (Fraction): upper bound, None for no bound.
            min_exclusive (bool): the lower bound itself is refused.
            max_exclusive (bool): the upper bound itself is refused.

        Returns:
            (dict) the validation result.
        """
        result = {"entry": value, "valid": True, "msg": ""}

        if value is None or value == "":
            if required == self.OPTIONAL:
                result["entry"] = None
            else:
                result["valid"] = False
                result["msg"] = "A number is required"
            return result

        if isinstance(value, bool) or isinstance(value, float):
            result["valid"] = False
            result["msg"] = "Numbers must be decimal strings, not floats"
            return result

        if isinstance(value, (int, Fraction)):
            number = Fraction(value)
        elif isinstance(value, str):
            text = value.strip()
            if re.match(RATIONAL_PATTERN, text) or re.match(FRACTION_PATTERN, text):
                number = Fraction(text.replace(" ", ""))
            else:
                result["valid"] = False
                result["msg"] = "'" + value + "' is not a decimal number"
                return result
        else:
            result["valid"] = False
            result["msg"] = "Value must be a decimal string"
            return result

        result["entry"] = number
        self._check_bounds(
            result, number, min_value, max_value, min_exclusive, max_exclusive
        )
        return result

    def real_field(
        self,
        value: Union[str, int, float],
        required: bool,
        min_value: float = None,
        max_value: float = None,
        min_exclusive: bool = False,
    ) -> dict[str, Any]:
        """
        Validate a finite floating point value.

        Used for tolerances and other numeric knobs where exactness is
        not needed. Strings are converted with float().

        Parameters:
            value (str | int | float): the value to check.
            required (bool): Validate.REQUIRED or Validate.OPTIONAL.
            min_value (float): lower bound, None for no bound.
            max_value (float): upper bound, None for no bound.
            min_exclusive (bool): the lower bound itself is refused.

        Returns:
            (dict) the validation result.
        """
        result = {"entry": value, "valid": True, "msg": ""}

        if value is None or value == "":
            if required == self.OPTIONAL:
                result["entry"] = None
            else:
                result["valid"] = False
                result["msg"] = "A number is required"
            return result

        try:
            number = float(value)
        except (TypeError, ValueError):
            result["valid"] = False
            result["msg"] = "Value does not represent a Float value"
            return result
        if isinstance(value, bool) or not math.isfinite(number):
            result["valid"] = False
            result["msg"] = "Value must be a finite number"
            return result

        result["entry"] = number
        self._check_bounds(result, number, min_value, max_value, min_exclusive, False)
        return result

    def identifier_field(
        self, text: str, required: bool, max_length: int = 64
    ) -> dict[str, Any]:
        """
        Validate a point identifier.

        Ids are non-empty strings without whitespace, at most
        'max_length' characters, surrounding whitespace removed.

        Parameters:
            text (str): the id to check.
            required (bool): Validate.REQUIRED or Validate.OPTIONAL.
            max_length (int): longest id accepted, default 64.

        Returns:
            (dict) the validation result.
        """
        result = {"entry": text, "valid": True, "msg": ""}

        if text is None or text == "":
            if required == self.OPTIONAL:
                result["entry"] = None
            else:
                result["valid"] = False
                result["msg"] = "A point id is required and cannot be empty"
            return result

        if not isinstance(text, str):
            result["valid"] = False
            result["msg"] = "A point id must be a string"
            return result

        text = text.strip()
        result["entry"] = text
        if len(text) > max_length:
            result["valid"] = False
            result["msg"] = (
                "The point id is too long (no more than "
                + str(max_length)
                + " characters allowed)"
            )
        elif not re.match(IDENTIFIER_PATTERN, text):
            result["valid"] = False
            result["msg"] = "'" + text + "' is not a valid point id"
        return result

    def choice_field(
        self, value: str, choices: tuple[str, ...], required: bool
    ) -> dict[str, Any]:
        """
        Validate a value drawn from a fixed set of names.

        Parameters:
            value (str): the value to check, case insensitive.
            choices (tuple[str, ...]): the accepted names, lower case.
            required (bool): Validate.REQUIRED or Validate.OPTIONAL.

        Returns:
            (dict) the validation result.
        """
        result = {"entry": value, "valid": True, "msg": ""}

        if value is None or value == "":
            if required == self.OPTIONAL:
                result["entry"] = None
            else:
                result["valid"] = False
                result["msg"] = "One of " + ", ".join(choices) + " is required"
            return result

        if not isinstance(value, str) or value.strip().lower() not in choices:
            result["valid"] = False
            result["msg"] = (
                "'" + str(value) + "' is not one of " + ", ".join(choices)
            )
        else:
            result["entry"] = value.strip().lower()
        return result

    def _check_bounds(
        self,
        result: dict[str, Any],
        number: Any,
        min_value: Any,
        max_value: Any,
        min_exclusive: bool,
        max_exclusive: bool,
    ) -> None:
        """
        Apply range limits to an already converted number.

        Parameters:
            result (dict): the result being built, updated in place.
            number (Any): the converted value.
            min_value (Any): lower bound or None.
            max_value (Any): upper bound or None.
            min_exclusive (bool): the lower bound itself is refused.
            max_exclusive (bool): the upper bound itself is refused.
        """
        if min_value is not None:
            if number < min_value or (min_exclusive and number == min_value):
                result["valid"] = False
                result["msg"] = (
                    "The entry must be "
                    + ("greater than " if min_exclusive else "at least ")
                    + str(min_value)
                )
                return
        if max_value is not None:
            if number > max_value or (max_exclusive and number == max_value):
                result["valid"] = False
                result["msg"] = (
                    "The entry must be "
                    + ("less than " if max_exclusive else "at most ")
                    + str(max_value)
                )
