"""
Test the DataFile class.

File:       test_02_datafile.py
Author:     Lorn B Kerr
Copyright:  (c) 2022, 2024, 2026 Lorn B Kerr
License:    MIT, see file LICENSE
"""

import os
import sys
from fractions import Fraction

import pytest

src_path = os.path.join(os.path.realpath("."), "src")
if src_path not in sys.path:
    sys.path.append(src_path)

from test_setup import i1_path, malformed_path

from relfix import DataFile, ParseError
from relfix.datafile import number_text
from relfix.testing_support.core_setup import filesystem


def test_02_01_constructor():
    datafile = DataFile(i1_path)
    assert datafile.read()["points"] == ["a", "b", "c"]
    with pytest.raises(ParseError):
        DataFile().read()
    # end test_02_01_constructor()


def test_02_02_read_keeps_number_text():
    document = DataFile().read(i1_path)
    assert document["points"] == ["a", "b", "c"]
    assert document["distance"][0] == ["0", "1", "2"]
    assert document["modulus"]["lambda"] == "0.5"
    # end test_02_02_read_keeps_number_text()


def test_02_03_parse_error_has_position():
    with pytest.raises(ParseError) as info:
        DataFile().read(malformed_path)
    assert info.value.line == 5
    assert info.value.column > 0
    assert "line 5" in str(info.value)
    # end test_02_03_parse_error_has_position()


def test_02_04_refuses_non_finite_constants():
    with pytest.raises(ParseError):
        DataFile().parse('{"epsilon": NaN}')
    with pytest.raises(ParseError):
        DataFile().parse('{"epsilon": Infinity}')
    # end test_02_04_refuses_non_finite_constants()


def test_02_05_refuses_duplicate_keys():
    with pytest.raises(ParseError) as info:
        DataFile().parse('{"points": ["a"], "points": ["b"]}')
    assert "points" in str(info.value)
    # end test_02_05_refuses_duplicate_keys()


def test_02_06_root_must_be_object():
    with pytest.raises(ParseError):
        DataFile().parse("[1, 2]")
    # end test_02_06_root_must_be_object()


def test_02_07_missing_file(filesystem):
    with pytest.raises(ParseError):
        DataFile().read(os.path.join(filesystem, "missing.json"))
    # end test_02_07_missing_file()


def test_02_08_write_canonical(filesystem):
    filename = os.path.join(filesystem, "corpus", "out.json")
    datafile = DataFile(filename)
    datafile.write({"b": [Fraction(1, 3)], "a": Fraction(1, 4)})
    with open(filename, encoding="utf-8") as source:
        text = source.read()
    assert text == '{\n  "a": "0.25",\n  "b": [\n    "1/3"\n  ]\n}\n'
    assert datafile.read() == {"a": "0.25", "b": ["1/3"]}
    # end test_02_08_write_canonical()


def test_02_09_number_text():
    assert number_text(Fraction(3)) == "3"
    assert number_text(Fraction(1, 4)) == "0.25"
    assert number_text(Fraction(3, 2)) == "1.5"
    assert number_text(Fraction(-1, 20)) == "-0.05"
    assert number_text(Fraction(1, 3)) == "1/3"
    assert number_text(Fraction(-2, 3)) == "-2/3"
    assert number_text(7) == "7"
    assert number_text(0.5) == "0.5"
    with pytest.raises(TypeError):
        number_text(True)
    with pytest.raises(TypeError):
        number_text("1")
    # end test_02_09_number_text()
