"""
Implement a DataFile for permanent storage of instances.

Instance files are a strict JSON subset: no comments, no NaN or
Infinity, no duplicate keys. Numeric literals are kept as their text
so that rational values are read exactly; numbers are written back as
strings.

File:       datafile.py
Author:     Lorn B Kerr
Copyright:  (c) 2022, 2024, 2026 Lorn B Kerr
License:    MIT, see file License
Version:    2.0.1
"""

import json
import logging
from fractions import Fraction
from typing import Any

from .errors import ParseError

file_version = "2.0.1"
changes = {
    "1.0.0": "Initial release",
    "1.1.0": "Changed name from 'Dbal' to 'DataFile'.",
    "2.0.0": "Strict JSON instance files replace the sqlite datafile.",
    "2.0.1": "The filename is only set by the constructor, read() and write().",
}

logger = logging.getLogger(__name__)


class DataFile:
    """
    Read and write strict JSON documents.

    The document root must be a JSON object. Errors are reported as
    ParseError with the line and column of the offending text.
    """

    def __init__(self, filename: str = "") -> None:
        """
        Create a new DataFile object.

        Parameters:
            filename (str): path of the file, may be set later by read()
                or write().
        """
        self.__filename: str = filename
        """Full path to the file in use."""

    def read(self, filename: str = "") -> dict[str, Any]:
        """
        Read and parse a document.

        Parameters:
            filename (str): the file to read, default the current one.

        Returns:
            (dict) the parsed document.

        Raises:
            ParseError: if the file cannot be read or is not strict JSON.
        """
        if filename:
            self.__filename = filename
        try:
            with open(self.__filename, "r", encoding="utf-8") as source:
                text = source.read()
        except OSError as exc:
            raise ParseError("cannot read " + self.__filename + ": " + exc.strerror)
        logger.debug("read %d characters from %s", len(text), self.__filename)
        return self.parse(text)

    def parse(self, text: str) -> dict[str, Any]:
        """
        Parse a document from text.

        Numeric literals come back as their source text, for example
        0.1 becomes '0.1'.

        Parameters:
            text (str): the document text.

        Returns:
            (dict) the parsed document.

        Raises:
            ParseError: for malformed text, non-finite constants,
                duplicate keys or a root that is not an object.
        """
        try:
            document = json.loads(
                text,
                parse_float=str,
                parse_int=str,
                parse_constant=self._refuse_constant,
                object_pairs_hook=self._unique_keys,
            )
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        if not isinstance(document, dict):
            raise ParseError("the document must be a JSON object", 1, 1)
        return document

    def write(self, document: dict[str, Any], filename: str = "") -> None:
        """
        Write a document in canonical form.

        Parameters:
            document (dict): the document.
            filename (str): the file to write, default the current one.
        """
        if filename:
            self.__filename = filename
        with open(self.__filename, "w", encoding="utf-8") as target:
            target.write(self.dumps(document))

    @staticmethod
    def dumps(document: dict[str, Any]) -> str:
        """
        Serialize a document with sorted keys and two space indents.

        Parameters:
            document (dict): the document; Fractions become strings.

        Returns:
            (str) the canonical text, newline terminated.
        """
        return (
            json.dumps(document, indent=2, sort_keys=True, default=number_text) + "\n"
        )

    @staticmethod
    def _refuse_constant(name: str) -> None:
        raise ParseError(name + " is not allowed in instance files")

    @staticmethod
    def _unique_keys(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
        document: dict[str, Any] = {}
        for key, value in pairs:
            if key in document:
                raise ParseError("duplicate key '" + key + "'")
            document[key] = value
        return document


def number_text(value: Any) -> str:
    """
    Write a number exactly.

    Fractions whose denominator divides a power of ten are written as
    decimals, others as 'p/q'; floats use repr().

    Parameters:
        value (Fraction | int | float): the number.

    Returns:
        (str) the text.

    Raises:
        TypeError: for anything that is not a number.
    """
    if isinstance(value, bool):
        raise TypeError("not a number: " + repr(value))
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, int):
        return str(value)
    if not isinstance(value, Fraction):
        raise TypeError("not a number: " + repr(value))
    if value.denominator == 1:
        return str(value.numerator)
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        return str(value.numerator) + "/" + str(value.denominator)
    places = max(twos, fives)
    scaled = abs(value.numerator) * (10**places // value.denominator)
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if value < 0 else ""
    return sign + digits[:-places] + "." + digits[-places:]
