"""
Test finite metric spaces, metric validation and selfmaps.

File:       test_07_metric.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
"""

import math
import os
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings

src_path = os.path.join(os.path.realpath("."), "src")
if src_path not in sys.path:
    sys.path.append(src_path)

from relfix import FiniteMetricSpace, MapError, SelfMap, ShapeMismatch, validate_metric
from relfix.metric import (
    FLOAT,
    RATIONAL,
    diameter,
    fixed_points,
    min_positive_distance,
    to_backend,
)
from relfix.testing_support.core_setup import i1_space, rational_spaces


def test_07_01_constructor():
    space = i1_space()
    assert space.size == 3
    assert space.points == ("a", "b", "c")
    assert space.d(0, 2) == 2
    assert space.index_of("c") == 2
    with pytest.raises(KeyError):
        space.index_of("z")
    with pytest.raises(ShapeMismatch):
        FiniteMetricSpace(("a", "b"), [[0, 1]])
    with pytest.raises(ShapeMismatch):
        FiniteMetricSpace(("a", "b"), [[0, 1], [1]])
    with pytest.raises(ShapeMismatch):
        FiniteMetricSpace(("a", "a"), [[0, 1], [1, 0]])
    # end test_07_01_constructor()


def test_07_02_on_line_default_ids():
    space = FiniteMetricSpace.on_line([Fraction(1, 2), 3])
    assert space.points == ("p0", "p1")
    assert space.d(1, 0) == Fraction(5, 2)
    # end test_07_02_on_line_default_ids()


def test_07_03_arithmetic():
    assert to_backend(Fraction(1, 3), FLOAT) == pytest.approx(1 / 3)
    assert to_backend(2, RATIONAL) == Fraction(2)
    assert to_backend(0.5, RATIONAL) == Fraction(1, 2)
    space = i1_space().with_arithmetic(FLOAT)
    assert all(isinstance(value, float) for row in space.dist for value in row)
    # end test_07_03_arithmetic()


def test_07_04_subspace():
    space = i1_space().subspace([2, 0])
    assert space.points == ("c", "a")
    assert space.dist == ((0, 2), (2, 0))
    # end test_07_04_subspace()


def test_07_05_valid_metric():
    report = validate_metric(i1_space())
    assert report.valid
    assert report.violations == ()
    # end test_07_05_valid_metric()


def test_07_06_violations():
    space = FiniteMetricSpace(("a", "b"), [[0, 1], [2, 0]])
    report = validate_metric(space)
    assert not report.valid
    assert report.violations[0].axiom == "symmetric"
    assert report.violations[0].witness == (0, 1)

    space = FiniteMetricSpace(("a", "b"), [[1, 1], [1, 0]])
    assert validate_metric(space).violations[0].axiom == "reflexive"

    space = FiniteMetricSpace(("a", "b"), [[0, -1], [-1, 0]])
    assert validate_metric(space).violations[0].axiom == "non-negative"

    space = FiniteMetricSpace(("a", "b"), [[0, 0], [0, 0]])
    axioms = [item.axiom for item in validate_metric(space).violations]
    assert axioms == ["sufficient"]

    space = FiniteMetricSpace(("a", "b"), [[0, math.nan], [math.nan, 0]])
    assert validate_metric(space).violations[0].axiom == "non-negative"

    space = FiniteMetricSpace(("a", "b", "c"), [[0, 1, 3], [1, 0, 1], [3, 1, 0]])
    violation = validate_metric(space).violations[0]
    assert violation.axiom == "triangular"
    assert violation.witness == (0, 1, 2)
    # end test_07_06_violations()


def test_07_07_diameter_and_scale():
    assert diameter(i1_space()) == 2
    assert min_positive_distance(i1_space()) == 1
    single = FiniteMetricSpace(("a",), [[0]])
    assert diameter(single) == 0
    assert min_positive_distance(single) == math.inf
    # end test_07_07_diameter_and_scale()


def test_07_08_selfmap():
    t = SelfMap((1, 2, 2))
    assert t.size == 3
    assert t(0) == 1
    assert t.iterate(0, 0) == 0
    assert t.iterate(0, 5) == 2
    assert SelfMap.identity(2).table == (0, 1)
    assert SelfMap.constant(3, 1).table == (1, 1, 1)
    with pytest.raises(MapError):
        SelfMap((0, 3))
    # end test_07_08_selfmap()


def test_07_09_restrict():
    t = SelfMap((1, 2, 2))
    assert t.restrict([2, 1]).table == (0, 0)
    with pytest.raises(MapError):
        t.restrict([0])
    # end test_07_09_restrict()


def test_07_10_fixed_points():
    assert fixed_points(SelfMap((1, 2, 2))) == frozenset({2})
    assert fixed_points(SelfMap((1, 0))) == frozenset()
    assert fixed_points(SelfMap.identity(3)) == frozenset({0, 1, 2})
    # end test_07_10_fixed_points()


@settings(max_examples=200, deadline=None)
@given(rational_spaces(1, 8))
def test_07_11_line_spaces_are_metric(space):
    assert validate_metric(space).valid
    assert diameter(space) >= 0
    assert min_positive_distance(space) > 0
    # end test_07_11_line_spaces_are_metric()


@settings(max_examples=200, deadline=None)
@given(rational_spaces(1, 8))
def test_07_12_diameter_is_the_largest_distance(space):
    largest = diameter(space)
    distances = [space.d(i, j) for i in range(space.size) for j in range(space.size)]
    assert all(largest >= value for value in distances)
    assert largest in distances
    # end test_07_12_diameter_is_the_largest_distance()
